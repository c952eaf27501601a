// Graph view model: vertices on a circle starting at the top and going
// clockwise, the same layout the service's TikZ export uses, so the screen
// and the exported figure agree. Colors repeat the service's 12-color
// cycle, assigned by triangle index.

export const PALETTE = [
  "red",
  "blue",
  "green",
  "orange",
  "magenta",
  "teal",
  "violet",
  "cyan",
  "brown",
  "lime",
  "gray",
  "pink",
] as const;

export interface Vertex {
  x: number;
  y: number;
  angle: number; // degrees, normalized to [-180, 180)
}

export function vertexPositions(
  n: number,
  cx: number,
  cy: number,
  radius: number,
): Vertex[] {
  const out: Vertex[] = [];
  for (let i = 0; i < n; i++) {
    let angle = 90 - (i * 360) / n;
    // same normalization the service's TikZ export applies
    angle = ((((angle + 180) % 360) + 360) % 360) - 180;
    const rad = (angle * Math.PI) / 180;
    // SVG's y axis points down, so subtract the sine
    out.push({
      x: cx + radius * Math.cos(rad),
      y: cy - radius * Math.sin(rad),
      angle,
    });
  }
  return out;
}

export function triangleColor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

export function trianglePath(
  triple: number[],
  vertices: Vertex[],
): string {
  const [a, b, c] = triple;
  const p = (v: Vertex) => `${v.x.toFixed(2)},${v.y.toFixed(2)}`;
  return `M ${p(vertices[a])} L ${p(vertices[b])} L ${p(vertices[c])} Z`;
}
