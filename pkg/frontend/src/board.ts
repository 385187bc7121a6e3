// SVG rendering of a puzzle board: circles at the patch coordinates, solid
// near edges, dashed far edges, live per-edge coloring from the local rule.

import type { Assignment, EdgeStatus, PuzzleData } from "./logic.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const RADIUS = 15;

export interface BoardHandles {
  svg: SVGSVGElement;
  edgeLines: SVGLineElement[];
  vertexCircles: SVGCircleElement[];
  vertexLabels: SVGTextElement[];
}

export function renderBoard(
  puzzle: PuzzleData,
  onVertexClick: (vertex: number) => void,
): BoardHandles {
  const xs = puzzle.coords.map((c) => c[0]);
  const ys = puzzle.coords.map((c) => c[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  const scale = Math.min(760 / spanX, 560 / spanY, 90);
  const pad = RADIUS + 14;
  const width = spanX * scale + 2 * pad;
  const height = spanY * scale + 2 * pad;

  const px = (v: number) => pad + (puzzle.coords[v][0] - minX) * scale;
  // flip y so the board is drawn the usual way up
  const py = (v: number) => height - pad - (puzzle.coords[v][1] - minY) * scale;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "board");

  const edgeLines: SVGLineElement[] = [];
  for (const [u, v, label] of puzzle.edges) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(px(u)));
    line.setAttribute("y1", String(py(u)));
    line.setAttribute("x2", String(px(v)));
    line.setAttribute("y2", String(py(v)));
    line.setAttribute("class", `edge ${label === "F" ? "far" : "near"}`);
    svg.appendChild(line);
    edgeLines.push(line);
  }

  const vertexCircles: SVGCircleElement[] = [];
  const vertexLabels: SVGTextElement[] = [];
  for (let v = 0; v < puzzle.vertex_count; v += 1) {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "vertex");
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(px(v)));
    circle.setAttribute("cy", String(py(v)));
    circle.setAttribute("r", String(RADIUS));
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(px(v)));
    text.setAttribute("y", String(py(v) + 4.5));
    text.setAttribute("text-anchor", "middle");
    group.appendChild(circle);
    group.appendChild(text);
    group.addEventListener("click", () => onVertexClick(v));
    svg.appendChild(group);
    vertexCircles.push(circle);
    vertexLabels.push(text);
  }
  return { svg, edgeLines, vertexCircles, vertexLabels };
}

export function paintBoard(
  handles: BoardHandles,
  puzzle: PuzzleData,
  assignment: Assignment,
  statuses: EdgeStatus[],
  selected: number | null,
): void {
  statuses.forEach((status, index) => {
    const line = handles.edgeLines[index];
    const label = puzzle.edges[index][2] === "F" ? "far" : "near";
    line.setAttribute("class", `edge ${label} ${status}`);
  });
  for (let v = 0; v < puzzle.vertex_count; v += 1) {
    const value = assignment.get(v);
    const given = Object.prototype.hasOwnProperty.call(puzzle.givens, String(v));
    handles.vertexLabels[v].textContent = value === undefined ? "" : String(value);
    const classes = ["node"];
    if (value !== undefined) classes.push("filled");
    if (given) classes.push("given");
    if (selected === v) classes.push("selected");
    handles.vertexCircles[v].setAttribute("class", classes.join(" "));
  }
}
