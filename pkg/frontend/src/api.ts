// Thin wrappers over the puzzle service; same-origin by default.

import type { EdgeStatus, PuzzleData } from "./logic.js";

export interface LatticeInfo {
  name: string;
  status: string;
  r: number | null;
  t: number | null;
  note?: string;
}

export interface CheckResponse {
  edges: EdgeStatus[];
  solved: boolean;
}

export type HintResponse =
  | { vertex: number; color: number }
  | { status: "inconsistent" | "complete" | "unknown" };

export class ApiError extends Error {}

async function post<T>(base: string, path: string, body: unknown): Promise<T> {
  const response = await fetch(base + path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!response.ok) {
    const detail = await response.text();
    throw new ApiError(`${path} failed (${response.status}): ${detail}`);
  }
  return (await response.json()) as T;
}

export async function fetchLattices(base = ""): Promise<LatticeInfo[]> {
  const response = await fetch(base + "/api/lattices");
  if (!response.ok) throw new ApiError(`lattice list failed (${response.status})`);
  return (await response.json()) as LatticeInfo[];
}

export function newPuzzle(
  params: {
    lattice: string;
    rows: number;
    cols: number;
    far_prob: number;
    seed: number;
  },
  base = "",
): Promise<PuzzleData> {
  return post<PuzzleData>(base, "/api/puzzle", params);
}

export function checkState(
  puzzleId: string,
  assignment: Record<string, number>,
  base = "",
): Promise<CheckResponse> {
  return post<CheckResponse>(base, "/api/check", {
    puzzle_id: puzzleId,
    assignment,
  });
}

export function requestHint(
  puzzleId: string,
  assignment: Record<string, number>,
  base = "",
): Promise<HintResponse> {
  return post<HintResponse>(base, "/api/hint", {
    puzzle_id: puzzleId,
    assignment,
  });
}
