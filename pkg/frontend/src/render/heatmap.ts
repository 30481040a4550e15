// Heatmap and charts panel.  The choropleth draws exactly the polygons
// the congestion endpoint returned; the two bar charts slice the 168-bin
// temporal table (all weekdays at the selected hour, all hours on the
// selected day) so every bar is one bin straight from the payload.

import { esc, field, fitProjection } from "./geo.js";
import type {
  ErrorEnvelope,
  HeatmapCollection,
  TemporalBin,
  TemporalResponse,
} from "../types.js";

const MAP_W = 420;
const MAP_H = 300;
const CHART_W = 420;
const CHART_H = 140;
const CHART_PAD = 18;
const DAY_NAMES = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"];

function choropleth(fc: HeatmapCollection): string {
  const all: [number, number][] = [];
  for (const f of fc.features) {
    for (const ring of f.geometry.coordinates) {
      for (const [lon, lat] of ring) {
        all.push([lat, lon]);
      }
    }
  }
  const proj = fitProjection(all, MAP_W, MAP_H);
  let max = 0;
  for (const f of fc.features) {
    if (f.properties.value > max) max = f.properties.value;
  }
  const cells = fc.features
    .map((f) => {
      const ring = f.geometry.coordinates[0] ?? [];
      const pts = ring
        .map(([lon, lat]) => `${proj.x(lon).toFixed(1)},${proj.y(lat).toFixed(1)}`)
        .join(" ");
      const opacity = max > 0 ? (0.15 + 0.85 * (f.properties.value / max)).toFixed(3) : "0.15";
      return (
        `<polygon class="cell" points="${pts}" fill-opacity="${opacity}"` +
        ` data-row="${f.properties.row}" data-col="${f.properties.col}"` +
        ` data-value="${String(f.properties.value)}">` +
        `<title>${String(f.properties.value)}</title></polygon>`
      );
    })
    .join("\n    ");
  return `<svg class="choropleth" viewBox="0 0 ${MAP_W} ${MAP_H}" role="img" data-cells="${fc.features.length}">
    ${cells}
  </svg>`;
}

function barChart(
  cls: string,
  bins: readonly (TemporalBin | undefined)[],
  labels: readonly string[],
): string {
  let max = 0;
  for (const b of bins) {
    if (b && b.index !== null && b.index > max) max = b.index;
  }
  const usableW = CHART_W - 2 * CHART_PAD;
  const usableH = CHART_H - 2 * CHART_PAD;
  const slot = usableW / bins.length;
  const barW = Math.max(2, slot * 0.7);
  const parts: string[] = [];
  bins.forEach((b, i) => {
    const x = CHART_PAD + i * slot + (slot - barW) / 2;
    const value = b?.index ?? null;
    const h = value !== null && max > 0 ? (usableH * value) / max : 0;
    const y = CHART_H - CHART_PAD - h;
    const missing = value === null ? " missing" : "";
    parts.push(
      `<rect class="bar${missing}" x="${x.toFixed(1)}" y="${y.toFixed(1)}"` +
        ` width="${barW.toFixed(1)}" height="${h.toFixed(1)}"` +
        ` data-value="${value === null ? "n/a" : String(value)}">` +
        `<title>${value === null ? "n/a" : String(value)}</title></rect>`,
    );
    const label = labels[i];
    if (label !== undefined) {
      parts.push(
        `<text class="bar-label" x="${(x + barW / 2).toFixed(1)}" y="${CHART_H - 4}" text-anchor="middle">${esc(label)}</text>`,
      );
    }
  });
  return `<svg class="chart ${cls}" viewBox="0 0 ${CHART_W} ${CHART_H}" role="img">
    ${parts.join("\n    ")}
  </svg>`;
}

export interface HeatmapViewInput {
  day: number;
  hour: number;
  congestion: HeatmapCollection | null;
  empty: ErrorEnvelope | null;
  temporal: TemporalResponse | null;
}

export function heatmapView(input: HeatmapViewInput): string {
  const { day, hour, congestion, empty, temporal } = input;

  let map: string;
  if (congestion !== null) {
    map = choropleth(congestion);
  } else if (empty !== null) {
    map = `<div class="no-data" data-code="${esc(empty.code)}">${esc(empty.message)}</div>`;
  } else {
    map = `<div class="no-data">select a day and hour</div>`;
  }

  let charts = "";
  let readout = "";
  if (temporal !== null) {
    const byKey = new Map<string, TemporalBin>();
    for (const b of temporal.bins) {
      byKey.set(`${b.day}:${b.hour}`, b);
    }
    const weekBins = DAY_NAMES.map((_, d) => byKey.get(`${d}:${hour}`));
    const hourBins = Array.from({ length: 24 }, (_, h) => byKey.get(`${day}:${h}`));
    const hourLabels = Array.from({ length: 24 }, (_, h) => (h % 3 === 0 ? String(h) : ""));
    charts =
      `<div class="chart-title">congestion index by weekday at hour ${hour}</div>\n` +
      barChart("weekday-chart", weekBins, DAY_NAMES) +
      `\n<div class="chart-title">congestion index by hour on ${DAY_NAMES[day] ?? String(day)}</div>\n` +
      barChart("hour-chart", hourBins, hourLabels);
    const selected = byKey.get(`${day}:${hour}`);
    if (selected) {
      readout = `<div class="bin-readout">selected bin: ${field("count", selected.count)} trips, index ${field(
        "index",
        selected.index,
      )}</div>`;
    }
  }

  return `<div class="heatmap-view">
  <div class="bin-label">day ${day} (${DAY_NAMES[day] ?? "?"}) hour ${hour}</div>
  ${map}
  ${readout}
  ${charts}
</div>`;
}
