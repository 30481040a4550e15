// Live trip panel: current route drawing, reroute highlight, and the
// predicted-vs-live deviation gauge.  The gauge needle sits at the
// server-reported live/predicted ratio and the marker at 1 + threshold;
// whether the needle is past the marker is taken from the report's own
// triggered flag, not re-decided here.

import { esc, field, fitProjection, polylinePoints } from "./geo.js";
import type { DeviationReport, TickEntry, TripStatusResponse } from "../types.js";

const W = 420;
const H = 260;

const GAUGE_W = 340;
const GAUGE_H = 56;
const GAUGE_PAD = 16;

function gaugeX(value: number, maxDomain: number): number {
  const usable = GAUGE_W - 2 * GAUGE_PAD;
  const clamped = Math.min(Math.max(value, 0), maxDomain);
  return GAUGE_PAD + (usable * clamped) / maxDomain;
}

export function deviationGauge(report: DeviationReport | null): string {
  if (report === null) {
    return `<svg class="gauge idle" viewBox="0 0 ${GAUGE_W} ${GAUGE_H}" role="img">
  <line class="gauge-axis" x1="${GAUGE_PAD}" y1="28" x2="${GAUGE_W - GAUGE_PAD}" y2="28"/>
  <text class="gauge-note" x="${GAUGE_W / 2}" y="20" text-anchor="middle">no reports yet</text>
</svg>`;
  }
  const limit = 1 + report.threshold;
  // keep both the needle and the marker inside the axis; the scale is
  // display-only, ordering along it matches ordering of the raw values
  const maxDomain = Math.max(2 * limit, (report.ratio ?? 0) * 1.25, 2);
  const markerX = gaugeX(limit, maxDomain);
  const needleX = report.ratio === null ? GAUGE_W - GAUGE_PAD : gaugeX(report.ratio, maxDomain);
  const baseX = gaugeX(1, maxDomain);
  const cls = report.triggered ? "gauge crossed" : "gauge";
  return `<svg class="${cls}" viewBox="0 0 ${GAUGE_W} ${GAUGE_H}" role="img">
  <line class="gauge-axis" x1="${GAUGE_PAD}" y1="28" x2="${GAUGE_W - GAUGE_PAD}" y2="28"/>
  <rect class="gauge-bar" x="${GAUGE_PAD}" y="22" width="${(needleX - GAUGE_PAD).toFixed(1)}" height="12"/>
  <line class="gauge-base" x1="${baseX.toFixed(1)}" y1="18" x2="${baseX.toFixed(1)}" y2="38"/>
  <line class="gauge-marker" x1="${markerX.toFixed(1)}" y1="12" x2="${markerX.toFixed(1)}" y2="44"/>
  <line class="gauge-needle" x1="${needleX.toFixed(1)}" y1="12" x2="${needleX.toFixed(1)}" y2="44"/>
  <text class="gauge-label" x="${GAUGE_PAD}" y="52">ratio ${field("ratio", report.ratio)}</text>
  <text class="gauge-limit" x="${markerX.toFixed(1)}" y="10" text-anchor="middle">limit ${field("threshold", report.threshold)}</text>
</svg>`;
}

export function tripView(trip: TripStatusResponse, lastTick: TickEntry | null): string {
  const proj = fitProjection(trip.route.geometry, W, H);
  const points = polylinePoints(trip.route.geometry, proj);
  const reroutedNow =
    lastTick !== null && lastTick.reroutes.some((r) => r.trip === trip.trip_id);
  const rerouteEvent = lastTick?.reroutes.find((r) => r.trip === trip.trip_id);
  const positionIdx = trip.route.nodes.indexOf(trip.position_node);
  const posPoint = positionIdx >= 0 ? trip.route.geometry[positionIdx] : undefined;

  return `<div class="trip-view" data-status="${esc(trip.status)}">
  <div class="trip-summary">
    <span class="stat">trip ${field("trip_id", trip.trip_id)}</span>
    <span class="stat">status ${field("status", trip.status)}</span>
    <span class="stat">at ${field("position_node", trip.position_node)}</span>
    <span class="stat">clock ${lastTick ? field("clock", lastTick.clock) : "n/a"} s</span>
  </div>
  <div class="trip-etas">
    <span class="stat">predicted ${field("predicted_eta", trip.predicted_eta)} s</span>
    <span class="stat">live ${field("live_eta", trip.live_eta)} s</span>
    <span class="stat">reroutes ${field("reroutes", trip.reroutes)}</span>
    <span class="stat">realized ${field("realized_sec", trip.realized_sec)} s</span>
  </div>
  ${deviationGauge(trip.last_deviation)}
  ${
    rerouteEvent
      ? `<div class="reroute-note">rerouted: live was ${field("old_live_eta", rerouteEvent.old_live_eta)} s,` +
        ` new route costs ${field("new_cost", rerouteEvent.new_cost)} s</div>`
      : ""
  }
  <svg class="trip-map${reroutedNow ? " rerouted-now" : ""}" viewBox="0 0 ${W} ${H}" role="img">
    <polyline class="route-line" fill="none" points="${points}"/>
    ${
      posPoint
        ? `<circle class="marker vehicle" r="6" cx="${proj.x(posPoint[1]).toFixed(1)}" cy="${proj.y(posPoint[0]).toFixed(1)}"/>`
        : ""
    }
  </svg>
  <div class="trip-nodes">${trip.route.nodes.map(esc).join(" &gt; ")}</div>
</div>`;
}
