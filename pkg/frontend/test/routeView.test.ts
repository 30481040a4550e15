// Route planner rendering against recorded payloads, offline.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { routeErrorView, routeView } from "../src/render/route.js";
import type { ErrorEnvelope, RouteResponse } from "../src/types.js";
import { attr, disableNetwork, fieldText, loadFixture, matchTags, polylinePointsOf, restoreNetwork } from "./support.js";

const route = loadFixture<RouteResponse>("route_ok");
const sameEndpoint = loadFixture<RouteResponse>("route_same");
const noRoute = loadFixture<ErrorEnvelope>("route_noroute");

beforeAll(disableNetwork);
afterAll(restoreNetwork);

describe("routeView", () => {
  const html = routeView(route);

  it("shows the ETA, distance, and crow-flight values exactly as returned", () => {
    expect(fieldText(html, "cost_sec")).toBe(String(route.cost_sec));
    expect(fieldText(html, "distance_m")).toBe(String(route.distance_m));
    expect(fieldText(html, "crow_flight_m")).toBe(String(route.crow_flight_m));
    expect(fieldText(html, "snapshot_version")).toBe(String(route.snapshot_version));
  });

  it("draws one polyline vertex per geometry entry", () => {
    const points = polylinePointsOf(html, "route-line").split(" ");
    expect(points).toHaveLength(route.geometry.length);
  });

  it("draws the crow-flight chord between the route's endpoints", () => {
    const chord = matchTags(html, "line", "crow-flight")[0]!;
    const points = polylinePointsOf(html, "route-line").split(" ");
    const [x1, y1] = points[0]!.split(",");
    const [x2, y2] = points[points.length - 1]!.split(",");
    expect(attr(chord, "x1")).toBe(x1);
    expect(attr(chord, "y1")).toBe(y1);
    expect(attr(chord, "x2")).toBe(x2);
    expect(attr(chord, "y2")).toBe(y2);
  });

  it("lists the route's nodes in order", () => {
    expect(html).toContain(route.nodes.join(" &gt; "));
  });

  it("does not flag a normal route as zero-length", () => {
    expect(html).not.toContain("zero-length");
  });
});

describe("routeView with origin equal to destination", () => {
  const html = routeView(sameEndpoint);

  it("shows the zero-length badge", () => {
    expect(html).toContain(`class="badge zero-length"`);
  });

  it("still reports the server's zero cost", () => {
    expect(fieldText(html, "cost_sec")).toBe(String(sameEndpoint.cost_sec));
  });
});

describe("routeErrorView", () => {
  const html = routeErrorView(noRoute);

  it("renders a visible toast carrying the error code", () => {
    expect(html).toContain(`data-code="${noRoute.code}"`);
    expect(html).toContain(`<strong>${noRoute.code}</strong>`);
    expect(html).toContain(noRoute.message);
  });

  it("draws no route geometry", () => {
    expect(matchTags(html, "polyline", "route-line")).toHaveLength(0);
  });
});
