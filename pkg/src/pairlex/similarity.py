"""Form-similarity oracle for interlingual homonym (false-pair) candidates.

Bulgarian lemmas are first rewritten through a small orthographic mapping
(ъ may surface as ы or о in the Russian cognate shape, щ expands to шт,
the jat reflex alternates between е and я), then compared to the Russian
lemma by normalized Levenshtein distance. The mapping can yield several
variants; the minimum distance over all variants counts.
"""

from __future__ import annotations

from functools import lru_cache

# Each Bulgarian character may rewrite to one of several Russian-shaped ones.
BG_TO_RU_VARIANTS: dict[str, tuple[str, ...]] = {
    "ъ": ("ы", "о", "а"),
    "щ": ("щ", "шт"),
    "я": ("я", "е"),
    "е": ("е", "я"),
    "ѝ": ("и",),
}

_MAX_VARIANTS = 64  # lemmas are short; bound the expansion anyway


def orthographic_variants(bg_word: str) -> list[str]:
    variants = [""]
    for ch in bg_word.lower():
        options = BG_TO_RU_VARIANTS.get(ch, (ch,))
        variants = [v + opt for v in variants for opt in options]
        if len(variants) > _MAX_VARIANTS:
            variants = variants[:_MAX_VARIANTS]
    return variants


@lru_cache(maxsize=4096)
def levenshtein(a: str, b: str) -> int:
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,  # deletion
                    current[j - 1] + 1,  # insertion
                    previous[j - 1] + (ca != cb),  # substitution
                )
            )
        previous = current
    return previous[-1]


def form_distance(ru_lemma: str, bg_lemma: str) -> float:
    """Normalized edit distance after orthographic mapping; 0.0 is identity."""
    ru = ru_lemma.lower()
    best = min(levenshtein(ru, variant) for variant in orthographic_variants(bg_lemma))
    longest = max(len(ru), len(bg_lemma), 1)
    return best / longest


def form_similar(ru_lemma: str, bg_lemma: str, threshold: float = 0.25) -> bool:
    return form_distance(ru_lemma, bg_lemma) <= threshold
