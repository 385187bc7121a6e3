// Board state and the edge-status rule, kept free of DOM so the contract
// tests can drive it directly. The classification must mirror the server's:
// an edge is happy exactly when |c(u)-c(v)| <= t matches its near/far label.

export type EdgeLabel = "N" | "F";
export type EdgeStatus = "happy" | "unhappy" | "undetermined";

export interface PuzzleData {
  puzzle_id: string;
  lattice: string;
  rows: number;
  cols: number;
  far_prob: number;
  seed: number;
  vertex_count: number;
  edges: [number, number, EdgeLabel][];
  coords: [number, number][];
  t: number;
  palette: number;
  givens: Record<string, number>;
}

export type Assignment = Map<number, number>;

export function edgeStatus(
  label: EdgeLabel,
  cu: number | undefined,
  cv: number | undefined,
  t: number,
): EdgeStatus {
  if (cu === undefined || cv === undefined) return "undetermined";
  const near = Math.abs(cu - cv) <= t;
  return near === (label === "N") ? "happy" : "unhappy";
}

export interface BoardCheck {
  statuses: EdgeStatus[];
  solved: boolean;
}

export function classify(puzzle: PuzzleData, assignment: Assignment): BoardCheck {
  const statuses = puzzle.edges.map(([u, v, label]) =>
    edgeStatus(label, assignment.get(u), assignment.get(v), puzzle.t),
  );
  const solved =
    assignment.size === puzzle.vertex_count &&
    statuses.every((s) => s === "happy");
  return { statuses, solved };
}

export function withGivens(puzzle: PuzzleData): Assignment {
  const assignment: Assignment = new Map();
  for (const [vertex, color] of Object.entries(puzzle.givens)) {
    assignment.set(Number(vertex), color);
  }
  return assignment;
}

/** Apply one digit of keyboard input to a vertex: digits accumulate while
 * the result stays inside the palette, otherwise they restart the value. */
export function applyDigit(
  puzzle: PuzzleData,
  assignment: Assignment,
  vertex: number,
  digit: number,
  accumulate: boolean,
): Assignment {
  const next = new Map(assignment);
  const current = assignment.get(vertex);
  let value = digit;
  if (accumulate && current !== undefined) {
    const appended = current * 10 + digit;
    if (appended < puzzle.palette) value = appended;
  }
  if (value >= puzzle.palette) return next; // rejected inline
  next.set(vertex, value);
  return next;
}

export function clearVertex(assignment: Assignment, vertex: number): Assignment {
  const next = new Map(assignment);
  next.delete(vertex);
  return next;
}

export function assignmentToJson(assignment: Assignment): Record<string, number> {
  const out: Record<string, number> = {};
  for (const [vertex, color] of assignment) out[String(vertex)] = color;
  return out;
}
