// Route planner panel: the server's polyline, the crow-flight chord, and
// the cost/distance readout.  One vertex per geometry entry, nothing
// resampled or simplified.

import { esc, field, fitProjection, polylinePoints } from "./geo.js";
import type { ErrorEnvelope, RouteResponse } from "../types.js";

const W = 420;
const H = 300;

export function routeView(route: RouteResponse): string {
  const proj = fitProjection(route.geometry, W, H);
  const points = polylinePoints(route.geometry, proj);
  const first = route.geometry[0];
  const last = route.geometry[route.geometry.length - 1];
  const zeroLength = route.nodes.length <= 1;

  let crow = "";
  let markers = "";
  if (first && last) {
    crow =
      `<line class="crow-flight" x1="${proj.x(first[1]).toFixed(1)}" y1="${proj.y(first[0]).toFixed(1)}"` +
      ` x2="${proj.x(last[1]).toFixed(1)}" y2="${proj.y(last[0]).toFixed(1)}"/>`;
    markers =
      `<circle class="marker origin" r="5" cx="${proj.x(first[1]).toFixed(1)}" cy="${proj.y(first[0]).toFixed(1)}"/>` +
      `<circle class="marker dest" r="5" cx="${proj.x(last[1]).toFixed(1)}" cy="${proj.y(last[0]).toFixed(1)}"/>`;
  }

  return `<div class="route-view">
  <div class="route-summary">
    <span class="stat">ETA ${field("cost_sec", route.cost_sec)} s</span>
    <span class="stat">${field("distance_m", route.distance_m)} m by road</span>
    <span class="stat">${field("crow_flight_m", route.crow_flight_m)} m crow flight</span>
    <span class="stat">snapshot v${field("snapshot_version", route.snapshot_version)}</span>
    ${zeroLength ? `<span class="badge zero-length">zero-length route</span>` : ""}
  </div>
  <div class="route-nodes">${route.nodes.map(esc).join(" &gt; ")}</div>
  <svg class="route-map" viewBox="0 0 ${W} ${H}" role="img">
    ${crow}
    <polyline class="route-line" fill="none" points="${points}"/>
    ${markers}
  </svg>
</div>`;
}

export function routeErrorView(err: ErrorEnvelope): string {
  return `<div class="route-view">
  <div class="toast error" data-code="${esc(err.code)}">
    <strong>${esc(err.code)}</strong> ${esc(err.message)}
  </div>
</div>`;
}
