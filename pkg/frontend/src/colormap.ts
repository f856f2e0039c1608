/**
 * Diverging blue-white-red palette, symmetric about zero so positive and
 * negative field lobes are visually distinct.
 */

const NEGATIVE: [number, number, number] = [33, 102, 172]; // blue
const CENTER: [number, number, number] = [255, 255, 255]; // white at zero
const POSITIVE: [number, number, number] = [178, 24, 43]; // red

function lerp(a: [number, number, number], b: [number, number, number], t: number): [number, number, number] {
  return [
    Math.round(a[0] + (b[0] - a[0]) * t),
    Math.round(a[1] + (b[1] - a[1]) * t),
    Math.round(a[2] + (b[2] - a[2]) * t),
  ];
}

export function rgbToHex([r, g, b]: [number, number, number]): string {
  const hex = (v: number) => v.toString(16).padStart(2, "0");
  return `#${hex(r)}${hex(g)}${hex(b)}`;
}

/**
 * Map a value to a palette colour given the symmetric scale maximum.
 * Values at +-scaleMax hit the palette ends; zero is white; a zero
 * scaleMax (all-zero data) maps everything to white.
 */
export function valueToColor(value: number, scaleMax: number): string {
  if (scaleMax <= 0 || value === 0) {
    return rgbToHex(CENTER);
  }
  const t = Math.max(-1, Math.min(1, value / scaleMax));
  return rgbToHex(t < 0 ? lerp(CENTER, NEGATIVE, -t) : lerp(CENTER, POSITIVE, t));
}

/** Palette sample points for the colourbar, from -scale to +scale. */
export function colorbarStops(n: number): { offset: number; color: string }[] {
  const stops = [];
  for (let s = 0; s <= n; s++) {
    const t = (2 * s) / n - 1;
    stops.push({ offset: s / n, color: valueToColor(t, 1) });
  }
  return stops;
}
