// State transitions: late responses must be dropped, geometry only ever
// comes from the latest accepted response, and per-view actions never
// overlap.

import { describe, expect, it } from "vitest";

import {
  applyRoute,
  applyRouteError,
  applyTick,
  applyTrip,
  initialState,
  selectTrip,
  singleFlight,
} from "../src/state.js";
import type { RouteResponse, TickEntry, TripStatusResponse } from "../src/types.js";
import { loadFixture } from "./support.js";

interface TickRow {
  tick: TickEntry;
  trip: TripStatusResponse;
}

const route = loadFixture<RouteResponse>("route_ok");
const rows = loadFixture<TickRow[]>("trip_ticks");
const firstRow = rows[0]!;
const trip = firstRow.trip;

describe("trip polling", () => {
  it("applies a poll issued for the current tick and trip", () => {
    let s = selectTrip(initialState(), trip.trip_id);
    s = applyTick(s, firstRow.tick);
    const next = applyTrip(s, trip.trip_id, s.tickSeq, trip);
    expect(next.trip).toBe(trip);
    expect(next.lastDeviation).toBe(trip.last_deviation);
    expect(next.clock).toBe(firstRow.tick.clock);
  });

  it("drops a poll that raced with a newer tick", () => {
    let s = selectTrip(initialState(), trip.trip_id);
    s = applyTick(s, firstRow.tick);
    const staleSeq = s.tickSeq;
    s = applyTick(s, rows[1]!.tick);
    const next = applyTrip(s, trip.trip_id, staleSeq, trip);
    expect(next).toBe(s);
    expect(next.trip).toBeNull();
  });

  it("drops a poll for a trip that is no longer selected", () => {
    let s = selectTrip(initialState(), trip.trip_id);
    s = applyTick(s, firstRow.tick);
    s = selectTrip(s, "t9");
    const next = applyTrip(s, trip.trip_id, s.tickSeq, trip);
    expect(next).toBe(s);
  });

  it("counts ticks and tracks the scenario clock", () => {
    let s = initialState();
    rows.slice(0, 3).forEach((row) => {
      s = applyTick(s, row.tick);
    });
    expect(s.tickSeq).toBe(3);
    expect(s.clock).toBe(rows[2]!.tick.clock);
    expect(s.lastTick).toBe(rows[2]!.tick);
  });
});

describe("route responses", () => {
  it("keeps only the latest response: a route replaces an error", () => {
    let s = applyRouteError(initialState(), { code: "NO_ROUTE", message: "x", details: {} });
    s = applyRoute(s, route);
    expect(s.route).toBe(route);
    expect(s.routeError).toBeNull();
  });

  it("keeps only the latest response: an error clears the drawn route", () => {
    let s = applyRoute(initialState(), route);
    s = applyRouteError(s, { code: "NO_ROUTE", message: "x", details: {} });
    expect(s.route).toBeNull();
    expect(s.routeError?.code).toBe("NO_ROUTE");
  });
});

describe("singleFlight", () => {
  it("runs one invocation at a time and reports skips as null", async () => {
    let running = 0;
    let ran = 0;
    let release: () => void = () => {};
    const gate = new Promise<void>((resolve) => {
      release = resolve;
    });
    const action = singleFlight(async () => {
      running += 1;
      expect(running).toBe(1);
      await gate;
      running -= 1;
      ran += 1;
      return ran;
    });

    const first = action();
    const second = action(); // overlaps, must be skipped
    release();
    expect(await second).toBeNull();
    expect(await first).toBe(1);
    expect(ran).toBe(1);

    expect(await action()).toBe(2); // free again after settling
  });

  it("frees the slot when the action throws", async () => {
    let calls = 0;
    const action = singleFlight(async () => {
      calls += 1;
      if (calls === 1) throw new Error("boom");
      return calls;
    });
    await expect(action()).rejects.toThrow("boom");
    expect(await action()).toBe(2);
  });
});
