import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    environment: "node",
    // the live-server test spawns the backend and replays a whole scenario
    testTimeout: 120_000,
    hookTimeout: 120_000,
  },
});
