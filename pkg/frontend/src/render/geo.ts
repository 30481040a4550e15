// Shared rendering helpers: HTML escaping, API-value spans, and the
// lat/lon -> pixel projection used by the map panels.  The projection is
// a plain linear fit of the drawn points into the viewport; it exists
// only to place pixels, never to measure anything.

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Render one API field as text; the span tags which field the number came from. */
export function field(name: string, value: number | string | boolean | null): string {
  const text = value === null ? "n/a" : String(value);
  return `<span data-field="${esc(name)}">${esc(text)}</span>`;
}

export interface Projection {
  x(lon: number): number;
  y(lat: number): number;
}

/** Fit the given [lat, lon] points into a width x height box, padded, y flipped. */
export function fitProjection(
  points: readonly (readonly [number, number])[],
  width: number,
  height: number,
  pad = 12,
): Projection {
  let latMin = Infinity;
  let latMax = -Infinity;
  let lonMin = Infinity;
  let lonMax = -Infinity;
  for (const [lat, lon] of points) {
    if (lat < latMin) latMin = lat;
    if (lat > latMax) latMax = lat;
    if (lon < lonMin) lonMin = lon;
    if (lon > lonMax) lonMax = lon;
  }
  if (!isFinite(latMin)) {
    latMin = latMax = 0;
    lonMin = lonMax = 0;
  }
  // degenerate spans (single point, straight vertical line) still project
  const latSpan = latMax - latMin || 1e-9;
  const lonSpan = lonMax - lonMin || 1e-9;
  const sx = (width - 2 * pad) / lonSpan;
  const sy = (height - 2 * pad) / latSpan;
  return {
    x: (lon) => pad + (lon - lonMin) * sx,
    y: (lat) => height - pad - (lat - latMin) * sy,
  };
}

export function polylinePoints(
  geometry: readonly (readonly [number, number])[],
  proj: Projection,
): string {
  return geometry
    .map(([lat, lon]) => `${proj.x(lon).toFixed(1)},${proj.y(lat).toFixed(1)}`)
    .join(" ");
}
