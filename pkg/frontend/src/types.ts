// Shapes of the backend's JSON payloads, field for field.  The UI never
// derives route or statistics values itself; everything it displays comes
// out of one of these objects.

export interface LatLon {
  lat: number;
  lon: number;
}

export interface ErrorEnvelope {
  code: string;
  message: string;
  details: Record<string, unknown>;
}

export interface HealthResponse {
  status: string;
  graph_nodes: number;
  graph_edges: number;
  snapshot_version: number;
  model_loaded: boolean;
  analytics_loaded: boolean;
  scenario_loaded: boolean;
}

export interface RouteResponse {
  geometry: [number, number][]; // [lat, lon] per vertex
  nodes: string[];
  cost_sec: number;
  distance_m: number;
  crow_flight_m: number;
  snapshot_version: number;
  origin_node: string;
  dest_node: string;
}

export interface TripCreateResponse {
  trip_id: string;
  route: {
    geometry: [number, number][];
    nodes: string[];
    cost_sec: number;
    distance_m: number;
    snapshot_version: number;
  };
  predicted_eta: number;
}

export interface DeviationReport {
  predicted_eta: number;
  live_eta: number;
  ratio: number | null; // null when the prediction was zero
  threshold: number;
  triggered: boolean;
}

export interface TripStatusResponse {
  trip_id: string;
  status: string; // active | arrived | unreachable
  position_node: string;
  destination: string;
  route: {
    geometry: [number, number][];
    nodes: string[];
    cost_sec: number;
    snapshot_version: number;
  };
  predicted_eta: number;
  predicted_remaining: number;
  live_eta: number;
  realized_sec: number | null;
  reroutes: number;
  started_at: number;
  snapshot_version: number;
  last_deviation: DeviationReport | null;
}

export interface TickEntry {
  tick: number;
  clock: number;
  snapshot_version: number;
  events_applied: { t: number; edge: string; factor: number }[];
  rejected_updates: number;
  reports: {
    trip: string;
    predicted_eta: number;
    live_eta: number;
    ratio: number | null;
    triggered: boolean;
  }[];
  reroutes: { trip: string; old_live_eta: number; new_cost: number; nodes: string[] }[];
  arrivals: { trip: string; realized_sec: number }[];
}

export interface SimStartResponse {
  ok: boolean;
  poll_interval: number;
  events: number;
  snapshot_version: number;
}

export interface HeatmapFeature {
  type: "Feature";
  geometry: { type: "Polygon"; coordinates: [number, number][][] }; // [lon, lat] ring
  properties: { value: number; row: number; col: number };
}

export interface HeatmapCollection {
  type: "FeatureCollection";
  features: HeatmapFeature[];
}

export interface TemporalBin {
  day: number;
  hour: number;
  count: number;
  index: number | null;
}

export interface TemporalResponse {
  bins: TemporalBin[]; // 168 rows, day-major
}
