// The interactive client: pick a lattice and size, type numbers into
// vertices, watch edges flip happy/unhappy instantly, ask for hints.

import {
  checkState,
  fetchLattices,
  newPuzzle,
  requestHint,
} from "./api.js";
import { paintBoard, renderBoard, type BoardHandles } from "./board.js";
import {
  applyDigit,
  assignmentToJson,
  classify,
  clearVertex,
  withGivens,
  type Assignment,
  type PuzzleData,
} from "./logic.js";

interface AppState {
  puzzle: PuzzleData | null;
  assignment: Assignment;
  selected: number | null;
  handles: BoardHandles | null;
  lastDigitAt: number;
  lastDigitVertex: number | null;
}

const state: AppState = {
  puzzle: null,
  assignment: new Map(),
  selected: null,
  handles: null,
  lastDigitAt: 0,
  lastDigitVertex: null,
};

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function setMessage(text: string, kind: "info" | "bad" | "good" = "info") {
  const box = el<HTMLDivElement>("message");
  box.textContent = text;
  box.className = `message ${kind}`;
}

function repaint() {
  if (!state.puzzle || !state.handles) return;
  const { statuses, solved } = classify(state.puzzle, state.assignment);
  paintBoard(state.handles, state.puzzle, state.assignment, statuses, state.selected);
  if (solved) {
    setMessage("Solved! Every edge is happy.", "good");
  }
}

function selectVertex(vertex: number) {
  state.selected = vertex;
  repaint();
}

async function startGame() {
  const lattice = el<HTMLSelectElement>("lattice").value;
  const rows = Number(el<HTMLInputElement>("rows").value);
  const cols = Number(el<HTMLInputElement>("cols").value);
  const farProb = Number(el<HTMLInputElement>("far-prob").value);
  const seed = Number(el<HTMLInputElement>("seed").value);
  setMessage("Generating…");
  try {
    const puzzle = await newPuzzle({
      lattice,
      rows,
      cols,
      far_prob: farProb,
      seed,
    });
    state.puzzle = puzzle;
    state.assignment = withGivens(puzzle);
    state.selected = null;
    const host = el<HTMLDivElement>("board-host");
    host.textContent = "";
    state.handles = renderBoard(puzzle, selectVertex);
    host.appendChild(state.handles.svg);
    el<HTMLSpanElement>("rules").textContent =
      `colors 0–${puzzle.palette - 1}, solid edges differ by ≤ ${puzzle.t}, ` +
      `dashed by ≥ ${puzzle.t + 1}`;
    setMessage(`New ${lattice} board.`);
    repaint();
  } catch (error) {
    setMessage(`Could not generate: ${error}`, "bad");
  }
}

async function hint() {
  if (!state.puzzle) return;
  try {
    const response = await requestHint(
      state.puzzle.puzzle_id,
      assignmentToJson(state.assignment),
    );
    if ("vertex" in response) {
      state.assignment = new Map(state.assignment);
      state.assignment.set(response.vertex, response.color);
      state.selected = response.vertex;
      setMessage(`Hint: vertex gets ${response.color}.`);
      repaint();
    } else if (response.status === "inconsistent") {
      setMessage("No solution extends the current numbers - something must change.", "bad");
    } else if (response.status === "complete") {
      setMessage("Already solved.", "good");
    } else {
      setMessage("The solver gave up within its budget.", "bad");
    }
  } catch (error) {
    setMessage(`Hint failed: ${error}`, "bad");
  }
}

async function verifyWithServer() {
  if (!state.puzzle) return;
  try {
    const response = await checkState(
      state.puzzle.puzzle_id,
      assignmentToJson(state.assignment),
    );
    setMessage(
      response.solved
        ? "Server agrees: solved!"
        : "Server checked: not solved yet.",
      response.solved ? "good" : "info",
    );
  } catch (error) {
    setMessage(`Check failed: ${error}`, "bad");
  }
}

function onKey(event: KeyboardEvent) {
  if (!state.puzzle || state.selected === null) return;
  if (event.key >= "0" && event.key <= "9") {
    const now = Date.now();
    const accumulate =
      state.lastDigitVertex === state.selected && now - state.lastDigitAt < 900;
    const next = applyDigit(
      state.puzzle,
      state.assignment,
      state.selected,
      Number(event.key),
      accumulate,
    );
    if (next.get(state.selected) === state.assignment.get(state.selected)) {
      const attempted = Number(event.key);
      if (attempted >= state.puzzle.palette) {
        setMessage(`Colors stop at ${state.puzzle.palette - 1}.`, "bad");
      }
    }
    state.assignment = next;
    state.lastDigitAt = now;
    state.lastDigitVertex = state.selected;
    repaint();
  } else if (event.key === "Backspace" || event.key === "Delete" || event.key === "x") {
    state.assignment = clearVertex(state.assignment, state.selected);
    repaint();
    event.preventDefault();
  }
}

async function boot() {
  const select = el<HTMLSelectElement>("lattice");
  try {
    const lattices = await fetchLattices();
    for (const info of lattices) {
      const option = document.createElement("option");
      option.value = info.name;
      const tag = info.status === "total-colorable" ? "always solvable" : info.status;
      option.textContent = `${info.name} (${tag})`;
      select.appendChild(option);
    }
    select.value = "6^3";
  } catch (error) {
    setMessage(`Could not reach the server: ${error}`, "bad");
  }
  el<HTMLButtonElement>("new-game").addEventListener("click", startGame);
  el<HTMLButtonElement>("hint").addEventListener("click", hint);
  el<HTMLButtonElement>("server-check").addEventListener("click", verifyWithServer);
  document.addEventListener("keydown", onKey);
  await startGame();
}

boot();
