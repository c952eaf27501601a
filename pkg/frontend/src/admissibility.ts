// Client-side pre-check before any session request. Matches the server's
// rule: a triple system exists only for counts congruent to 1 or 3 mod 6.

export function parseKeywords(text: string): string[] {
  return text
    .split(/[,\n]/)
    .map((w) => w.trim())
    .filter((w) => w !== "");
}

export function admissibleCount(n: number): boolean {
  return n >= 3 && (n % 6 === 1 || n % 6 === 3);
}

export function admissibilityMessage(n: number): string | null {
  if (admissibleCount(n)) return null;
  return (
    `${n} keyword(s) will not work: the keyword count must be ` +
    `congruent to 1 or 3 mod 6 (and at least 3); try ` +
    `${nearestAdmissible(n).join(" or ")}`
  );
}

export function nearestAdmissible(n: number): number[] {
  let below = n - 1;
  while (below >= 3 && !admissibleCount(below)) below -= 1;
  let above = Math.max(n + 1, 3);
  while (!admissibleCount(above)) above += 1;
  return below >= 3 ? [below, above] : [above];
}

export function duplicateKeywords(words: string[]): string[] {
  const seen = new Map<string, string>();
  const dups: string[] = [];
  for (const w of words) {
    const key = w.toLowerCase();
    const prior = seen.get(key);
    if (prior !== undefined && !dups.includes(prior)) dups.push(prior);
    seen.set(key, prior ?? w);
  }
  return dups;
}
