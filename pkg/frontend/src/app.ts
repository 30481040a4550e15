// Browser wiring.  Everything below reads controls, calls the backend (or
// the recorded fixtures in offline mode), folds responses into ViewState,
// and swaps panel innerHTML with the rendered views.  No view logic lives
// here and nothing is computed from coordinates.

import { ApiClient, ApiError } from "./api.js";
import { FIXTURES } from "./fixtures.gen.js";
import {
  applyCongestion,
  applyCongestionEmpty,
  applyRoute,
  applyRouteError,
  applyTemporal,
  applyTick,
  applyTrip,
  initialState,
  selectTrip,
  singleFlight,
  type ViewState,
} from "./state.js";
import { heatmapView } from "./render/heatmap.js";
import { routeErrorView, routeView } from "./render/route.js";
import { tripView } from "./render/trip.js";
import type {
  HeatmapCollection,
  LatLon,
  RouteResponse,
  SimStartResponse,
  TemporalResponse,
  TickEntry,
  TripCreateResponse,
  TripStatusResponse,
} from "./types.js";

interface Backend {
  route(origin: LatLon, dest: LatLon): Promise<RouteResponse>;
  congestion(day: number, hour: number): Promise<HeatmapCollection>;
  temporal(): Promise<TemporalResponse>;
  createTrip(origin: LatLon | string, dest: LatLon | string): Promise<TripCreateResponse>;
  getTrip(tripId: string): Promise<TripStatusResponse>;
  simStart(scenario: Record<string, unknown>): Promise<SimStartResponse>;
  simTick(): Promise<TickEntry>;
}

/** Replays the recorded payloads; used when the page runs with ?fixtures=1. */
class FixtureBackend implements Backend {
  private cursor = 0;

  async route(origin: LatLon, dest: LatLon): Promise<RouteResponse> {
    const same = origin.lat === dest.lat && origin.lon === dest.lon;
    return same ? FIXTURES.route_same : FIXTURES.route_ok;
  }

  async congestion(day: number, hour: number): Promise<HeatmapCollection> {
    if (day === 2 && hour === 8) return FIXTURES.congestion;
    throw new ApiError(404, FIXTURES.congestion_empty);
  }

  async temporal(): Promise<TemporalResponse> {
    return FIXTURES.temporal;
  }

  async createTrip(): Promise<TripCreateResponse> {
    this.cursor = 0;
    return FIXTURES.trip_create;
  }

  async getTrip(): Promise<TripStatusResponse> {
    const row = FIXTURES.trip_ticks[this.cursor - 1];
    return row ? row.trip : FIXTURES.trip_initial;
  }

  async simStart(): Promise<SimStartResponse> {
    this.cursor = 0;
    return FIXTURES.sim_start;
  }

  async simTick(): Promise<TickEntry> {
    const row = FIXTURES.trip_ticks[Math.min(this.cursor, FIXTURES.trip_ticks.length - 1)];
    this.cursor += 1;
    if (!row) throw new Error("no recorded ticks");
    return row.tick;
  }
}

function parseLatLon(text: string): LatLon | null {
  const m = text.trim().split(",");
  if (m.length !== 2) return null;
  const lat = Number(m[0]);
  const lon = Number(m[1]);
  if (!isFinite(lat) || !isFinite(lon)) return null;
  return { lat, lon };
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function init(): void {
  const params = new URLSearchParams(location.search);
  const fixtureMode = params.get("fixtures") === "1";
  const backend: Backend = fixtureMode
    ? new FixtureBackend()
    : new ApiClient(params.get("api") ?? "");

  let state: ViewState = initialState();
  const routePanel = el<HTMLDivElement>("route-panel");
  const tripPanel = el<HTMLDivElement>("trip-panel");
  const heatmapPanel = el<HTMLDivElement>("heatmap-panel");

  if (fixtureMode) {
    el<HTMLSpanElement>("mode-banner").textContent = "offline demo (recorded payloads)";
  }

  function redrawRoute(): void {
    if (state.routeError) {
      routePanel.innerHTML = routeErrorView(state.routeError);
    } else if (state.route) {
      routePanel.innerHTML = routeView(state.route);
    }
  }

  function redrawTrip(): void {
    if (state.trip) {
      tripPanel.innerHTML = tripView(state.trip, state.lastTick);
    }
  }

  function redrawHeatmap(): void {
    heatmapPanel.innerHTML = heatmapView({
      day: state.heatmapDay,
      hour: state.heatmapHour,
      congestion: state.congestion,
      empty: state.congestionEmpty,
      temporal: state.temporal,
    });
  }

  const planRoute = singleFlight(async () => {
    const origin = parseLatLon(el<HTMLInputElement>("origin").value);
    const dest = parseLatLon(el<HTMLInputElement>("dest").value);
    if (!origin || !dest) {
      state = applyRouteError(state, {
        code: "BAD_COORDINATE",
        message: "enter lat,lon in both boxes",
        details: {},
      });
      redrawRoute();
      return;
    }
    state = { ...state, origin, dest };
    try {
      state = applyRoute(state, await backend.route(origin, dest));
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      state = applyRouteError(state, { code: err.code, message: err.message, details: err.details });
    }
    redrawRoute();
  });

  const startTrip = singleFlight(async () => {
    const origin = parseLatLon(el<HTMLInputElement>("origin").value) ?? el<HTMLInputElement>("origin").value.trim();
    const dest = parseLatLon(el<HTMLInputElement>("dest").value) ?? el<HTMLInputElement>("dest").value.trim();
    try {
      await backend.simStart(JSON.parse(el<HTMLTextAreaElement>("scenario").value));
      const created = await backend.createTrip(origin, dest);
      state = selectTrip(state, created.trip_id);
      state = { ...state, lastTick: null, tickSeq: 0, clock: null };
      state = applyTrip(state, created.trip_id, state.tickSeq, await backend.getTrip(created.trip_id));
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      tripPanel.innerHTML = routeErrorView({ code: err.code, message: err.message, details: err.details });
      return;
    }
    redrawTrip();
  });

  const tickOnce = singleFlight(async () => {
    const tripId = state.tripId;
    if (!tripId) return;
    try {
      state = applyTick(state, await backend.simTick());
      const seq = state.tickSeq;
      state = applyTrip(state, tripId, seq, await backend.getTrip(tripId));
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      tripPanel.innerHTML = routeErrorView({ code: err.code, message: err.message, details: err.details });
      return;
    }
    redrawTrip();
  });

  const loadHeatmap = singleFlight(async () => {
    const day = Number(el<HTMLSelectElement>("day").value);
    const hour = Number(el<HTMLSelectElement>("hour").value);
    state = { ...state, heatmapDay: day, heatmapHour: hour };
    try {
      state = applyTemporal(state, await backend.temporal());
      state = applyCongestion(state, await backend.congestion(day, hour));
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      state = applyCongestionEmpty(state, { code: err.code, message: err.message, details: err.details });
    }
    redrawHeatmap();
  });

  el<HTMLButtonElement>("btn-route").addEventListener("click", () => void planRoute());
  el<HTMLButtonElement>("btn-start-trip").addEventListener("click", () => void startTrip());
  el<HTMLButtonElement>("btn-tick").addEventListener("click", () => void tickOnce());
  el<HTMLButtonElement>("btn-heatmap").addEventListener("click", () => void loadHeatmap());

  let timer: ReturnType<typeof setInterval> | null = null;
  el<HTMLInputElement>("auto-tick").addEventListener("change", (ev) => {
    const on = (ev.target as HTMLInputElement).checked;
    if (on && timer === null) {
      timer = setInterval(() => void tickOnce(), 1000);
    } else if (!on && timer !== null) {
      clearInterval(timer);
      timer = null;
    }
  });

  redrawHeatmap();
}

if (typeof document !== "undefined") {
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", init);
  } else {
    init();
  }
}
