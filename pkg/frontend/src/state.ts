// Dashboard state.  Route geometry is only ever replaced wholesale with
// what the server last returned; nothing in here recomputes routes, ETAs,
// or statistics.  Responses that arrive late (after a newer tick, or for a
// trip that is no longer selected) are discarded.

import type {
  DeviationReport,
  ErrorEnvelope,
  HeatmapCollection,
  LatLon,
  RouteResponse,
  TemporalResponse,
  TickEntry,
  TripStatusResponse,
} from "./types.js";

export interface ViewState {
  origin: LatLon | null;
  dest: LatLon | null;
  route: RouteResponse | null;
  routeError: ErrorEnvelope | null;
  tripId: string | null;
  trip: TripStatusResponse | null;
  lastTick: TickEntry | null;
  tickSeq: number; // how many tick responses this client has applied
  clock: number | null;
  lastDeviation: DeviationReport | null;
  heatmapDay: number;
  heatmapHour: number;
  congestion: HeatmapCollection | null;
  congestionEmpty: ErrorEnvelope | null;
  temporal: TemporalResponse | null;
}

export function initialState(): ViewState {
  return {
    origin: null,
    dest: null,
    route: null,
    routeError: null,
    tripId: null,
    trip: null,
    lastTick: null,
    tickSeq: 0,
    clock: null,
    lastDeviation: null,
    heatmapDay: 2,
    heatmapHour: 8,
    congestion: null,
    congestionEmpty: null,
    temporal: null,
  };
}

export function applyRoute(state: ViewState, route: RouteResponse): ViewState {
  return { ...state, route, routeError: null };
}

export function applyRouteError(state: ViewState, err: ErrorEnvelope): ViewState {
  // the last response was not a route, so there is no geometry to show
  return { ...state, route: null, routeError: err };
}

export function selectTrip(state: ViewState, tripId: string): ViewState {
  return { ...state, tripId, trip: null, lastDeviation: null };
}

export function applyTick(state: ViewState, entry: TickEntry): ViewState {
  return { ...state, lastTick: entry, tickSeq: state.tickSeq + 1, clock: entry.clock };
}

/** Apply a trip poll that was issued for (tripId, atSeq); stale ones are no-ops. */
export function applyTrip(
  state: ViewState,
  tripId: string,
  atSeq: number,
  payload: TripStatusResponse,
): ViewState {
  if (tripId !== state.tripId || atSeq < state.tickSeq) {
    return state;
  }
  return { ...state, trip: payload, lastDeviation: payload.last_deviation };
}

export function applyCongestion(state: ViewState, fc: HeatmapCollection): ViewState {
  return { ...state, congestion: fc, congestionEmpty: null };
}

export function applyCongestionEmpty(state: ViewState, err: ErrorEnvelope): ViewState {
  return { ...state, congestion: null, congestionEmpty: err };
}

export function applyTemporal(state: ViewState, temporal: TemporalResponse): ViewState {
  return { ...state, temporal };
}

/**
 * Wrap an async action so at most one invocation is running at a time.
 * Calls made while one is pending resolve to null without starting work.
 */
export function singleFlight<T>(action: () => Promise<T>): () => Promise<T | null> {
  let pending = false;
  return async () => {
    if (pending) return null;
    pending = true;
    try {
      return await action();
    } finally {
      pending = false;
    }
  };
}
