"""ASCII slugs for page file names and deterministic Cyrillic collation.

Slugs keep file systems portable; display strings stay Cyrillic. Collation is
plain code-point order over a fixed alphabet with two exceptions baked in:
ё sorts immediately after е, and Bulgarian ѝ folds to и. No locale calls, so
index order is identical on every machine.
"""

from __future__ import annotations

# Fixed Cyrillic -> Latin table (Bulgarian ъ romanized as A, soft/hard signs dropped).
TRANSLIT = {
    "а": "A", "б": "B", "в": "V", "г": "G", "д": "D", "е": "E", "ё": "E",
    "ж": "ZH", "з": "Z", "и": "I", "ѝ": "I", "й": "J", "к": "K", "л": "L",
    "м": "M", "н": "N", "о": "O", "п": "P", "р": "R", "с": "S", "т": "T",
    "у": "U", "ф": "F", "х": "H", "ц": "TS", "ч": "CH", "ш": "SH",
    "щ": "SHT", "ъ": "A", "ы": "Y", "ь": "", "э": "E", "ю": "YU", "я": "YA",
}


def translit_word(word: str) -> str:
    out = []
    for ch in word.lower():
        if ch in TRANSLIT:
            out.append(TRANSLIT[ch])
        elif ch.isascii() and (ch.isalnum()):
            out.append(ch.upper())
        # everything else (spaces, brackets, hyphens inside lemmas) is dropped
    return "".join(out)


def slug_from_lemmas(lemmas: list[str] | tuple[str, ...]) -> str:
    """Upper-case ASCII page slug: transliterated lemmas joined by '-'."""
    parts = [translit_word(lemma) for lemma in lemmas]
    return "-".join(p for p in parts if p)


# Collation alphabet; ё shares the slot of е with a tiebreak of 1.
_ALPHABET = "абвгдежзийклмнопрстуфхцчшщъыьэюя"
_RANK = {ch: (i, 0) for i, ch in enumerate(_ALPHABET)}
_RANK["ё"] = (_ALPHABET.index("е"), 1)
_RANK["ѝ"] = (_ALPHABET.index("и"), 0)


def collation_key(word: str) -> tuple:
    """Sort key for lemmas: alphabet rank per letter, unknown chars trail."""
    key = []
    for ch in word.lower():
        if ch in _RANK:
            key.append(_RANK[ch])
        else:
            key.append((len(_ALPHABET) + ord(ch), 0))
    return tuple(key)
