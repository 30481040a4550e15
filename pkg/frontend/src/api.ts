// Thin fetch client for the backend API.  Non-2xx responses carry the
// {code, message, details} envelope, surfaced here as ApiError so callers
// can branch on the code (NO_ROUTE, EMPTY_BIN, ...) instead of the status.

import type {
  ErrorEnvelope,
  HealthResponse,
  HeatmapCollection,
  LatLon,
  RouteResponse,
  SimStartResponse,
  TemporalResponse,
  TickEntry,
  TripCreateResponse,
  TripStatusResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly details: Record<string, unknown>;

  constructor(status: number, envelope: ErrorEnvelope) {
    super(`${envelope.code}: ${envelope.message}`);
    this.name = "ApiError";
    this.status = status;
    this.code = envelope.code;
    this.details = envelope.details ?? {};
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, init);
  const body = await res.json();
  if (!res.ok) {
    throw new ApiError(res.status, body as ErrorEnvelope);
  }
  return body as T;
}

function post(payload: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  };
}

export class ApiClient {
  constructor(readonly base: string) {}

  health(): Promise<HealthResponse> {
    return request(this.base, "/api/health");
  }

  route(origin: LatLon, dest: LatLon): Promise<RouteResponse> {
    return request(this.base, "/api/route", post({ origin, dest }));
  }

  congestion(day: number, hour: number): Promise<HeatmapCollection> {
    return request(this.base, `/api/congestion?day=${day}&hour=${hour}`);
  }

  temporal(): Promise<TemporalResponse> {
    return request(this.base, "/api/stats/temporal");
  }

  createTrip(origin: LatLon | string, dest: LatLon | string): Promise<TripCreateResponse> {
    return request(this.base, "/api/trips", post({ origin, dest }));
  }

  getTrip(tripId: string): Promise<TripStatusResponse> {
    return request(this.base, `/api/trips/${encodeURIComponent(tripId)}`);
  }

  simStart(scenario: Record<string, unknown>): Promise<SimStartResponse> {
    return request(this.base, "/api/sim/start", post(scenario));
  }

  simTick(): Promise<TickEntry> {
    return request(this.base, "/api/sim/tick", post({}));
  }
}
