// Scripted session against the real server: new game, hints to completion.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";

import { checkState, fetchLattices, newPuzzle, requestHint } from "../src/api.js";
import { assignmentToJson, classify, withGivens, type Assignment } from "../src/logic.js";

const PORT = 8765;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt += 1) {
    try {
      const response = await fetch(`${BASE}/api/lattices`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-c", `from happy_edges.service import serve; serve(${PORT})`],
    { cwd: new URL("../..", import.meta.url).pathname, stdio: "ignore" },
  );
  await waitForServer();
}, 30_000);

afterAll(() => {
  server.kill();
});

describe("scripted session", () => {
  it("lists all 19 lattices", async () => {
    const lattices = await fetchLattices(BASE);
    expect(lattices).toHaveLength(19);
  });

  it("plays a board to completion with hints", async () => {
    const puzzle = await newPuzzle(
      { lattice: "4^4", rows: 2, cols: 2, far_prob: 0.4, seed: 2 },
      BASE,
    );
    let assignment: Assignment = withGivens(puzzle);
    for (let step = 0; step < puzzle.vertex_count + 1; step += 1) {
      const hint = await requestHint(
        puzzle.puzzle_id,
        assignmentToJson(assignment),
        BASE,
      );
      if ("status" in hint) {
        expect(hint.status).toBe("complete");
        break;
      }
      assignment = new Map(assignment);
      assignment.set(hint.vertex, hint.color);
    }
    const final = await checkState(
      puzzle.puzzle_id,
      assignmentToJson(assignment),
      BASE,
    );
    expect(final.solved).toBe(true);
    // and the local classifier agrees with the server on the final state
    const local = classify(puzzle, assignment);
    expect(local.solved).toBe(true);
    expect(local.statuses).toEqual(final.edges);
  }, 60_000);

  it("classifies play states exactly like POST /api/check", async () => {
    const puzzle = await newPuzzle(
      { lattice: "6^3", rows: 2, cols: 2, far_prob: 0.5, seed: 11 },
      BASE,
    );
    // a deterministic batch of partial/total states
    const states: Assignment[] = [new Map()];
    for (let k = 1; k <= 6; k += 1) {
      const state: Assignment = new Map();
      for (let v = 0; v < puzzle.vertex_count; v += 1) {
        if ((v * 7 + k) % 3 !== 0) {
          state.set(v, (v * k + 1) % puzzle.palette);
        }
      }
      states.push(state);
    }
    for (const state of states) {
      const server = await checkState(
        puzzle.puzzle_id,
        assignmentToJson(state),
        BASE,
      );
      const local = classify(puzzle, state);
      expect(local.statuses).toEqual(server.edges);
      expect(local.solved).toBe(server.solved);
    }
  }, 60_000);

  it("reports inconsistency when the player paints a far edge equal", async () => {
    const puzzle = await newPuzzle(
      { lattice: "4^4", rows: 2, cols: 2, far_prob: 0.5, seed: 21 },
      BASE,
    );
    const far = puzzle.edges.find(([, , label]) => label === "F");
    if (!far) return; // labeling happened to be all-near
    const [u, v] = far;
    const hint = await requestHint(
      puzzle.puzzle_id,
      { [String(u)]: 0, [String(v)]: 0 },
      BASE,
    );
    expect("status" in hint && hint.status).toBe("inconsistent");
  }, 30_000);
});
