"""Implicative chains: stepwise divergence paths outward from a page header.

A chain starts at a header sense (polarization level 0) and alternates
language sides. Expansion walks asynchronous signs only; a synchronous sign
closes the chain (its pair heads a page of its own), diffuse and disjunctive
signs hang off as leaves, and a scheme-neutral partner sense cuts the chain.
Each step raises the polarization level by exactly one; a diffuse sign that
compensates an asynchronous sign on the same origin sense sits one level
below it (the second polarization wave).

Synchronous signs incident to the header senses themselves are rival
headers, not page content, and are never walked. A visited-lexeme set per
path guards against cycles; blocked revisits and the configurable depth
bound truncate the chain with a cut terminal and a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .classify import BinarySign, SignGraph, SignType, SYNCHRONOUS_TYPES, WARNING_TYPES
from .model import Diagnostic, LexiconModel, Sense


class ChainTerminal(str, Enum):
    SYNCHRONOUS_PAIR = "synchronous_pair"
    DIFFUSE_LEAF = "diffuse_leaf"
    DISJUNCTIVE_LEAF = "disjunctive_leaf"
    CUT_BY_NEUTRAL = "cut_by_neutral"  # also cycle/depth/dead-end truncations


_LEAF_TERMINALS = {
    SignType.DIFFUSE: ChainTerminal.DIFFUSE_LEAF,
    SignType.DISJUNCTIVE: ChainTerminal.DISJUNCTIVE_LEAF,
}


@dataclass(frozen=True)
class ChainStep:
    sign: BinarySign
    level: int


@dataclass(frozen=True)
class ImplicativeChain:
    links: tuple[Sense, ...]
    steps: tuple[ChainStep, ...]
    terminal: ChainTerminal

    def sign_uids(self) -> tuple[str, ...]:
        return tuple(step.sign.uid for step in self.steps)


def _stable(signs: Iterable[BinarySign]) -> list[BinarySign]:
    return sorted(
        signs,
        key=lambda s: (
            s.declared_index if s.declared_index is not None else 1_000_000,
            s.uid,
        ),
    )


class _ChainWalk:
    def __init__(
        self,
        model: LexiconModel,
        graph: SignGraph,
        header_uids: set[str],
        max_depth: int,
    ):
        self.model = model
        self.graph = graph
        self.header_uids = header_uids
        self.max_depth = max_depth
        self.chains: list[ImplicativeChain] = []
        self.diagnostics: list[Diagnostic] = []

    def _cut(self, links, steps, code: str, ref: str, message: str) -> None:
        self.chains.append(
            ImplicativeChain(tuple(links), tuple(steps), ChainTerminal.CUT_BY_NEUTRAL)
        )
        self.diagnostics.append(Diagnostic(code, ref, message))

    def expand(
        self,
        node: Sense,
        level: int,
        links: tuple[Sense, ...],
        steps: tuple[ChainStep, ...],
        visited: frozenset[str],
    ) -> bool:
        """Walk outward from `node`; returns True when the subtree emitted chains."""
        emitted = False
        lexeme = self.model.lexeme_of(node)
        for s_prime in lexeme.senses:
            word_signs: list[BinarySign] = []
            leaf_signs: list[BinarySign] = []
            for sign in _stable(self.graph.of_sense(s_prime.id)):
                if sign.uid in self.header_uids or sign.sign_type in WARNING_TYPES:
                    continue
                if sign.sign_type in _LEAF_TERMINALS:
                    unique = sign.unique_sense
                    if unique is not None and unique.id == s_prime.id:
                        leaf_signs.append(sign)
                    continue
                word_signs.append(sign)

            # First asynchronous path actually walked through this sense; its
            # compensation leaves sit one polarization level below the step.
            compensation_base: Optional[tuple[tuple[Sense, ...], tuple[ChainStep, ...]]] = None
            for sign in word_signs:
                partner = next(s for s in sign.senses() if s.id != s_prime.id)
                if partner.lexeme_id in visited:
                    if sign.uid not in {st.sign.uid for st in steps}:
                        self._cut(
                            links, steps, "chain.cycle", sign.uid,
                            f"cycle through {partner.lexeme_id} truncated",
                        )
                        emitted = True
                    continue
                if level == 0 and sign.sign_type in SYNCHRONOUS_TYPES:
                    continue  # rival header pair, heads its own page
                if partner.scheme_neutral:
                    self._cut(
                        links, steps, "chain.cut_neutral", sign.uid,
                        f"scheme-neutral sense {partner.id} cuts the chain",
                    )
                    emitted = True
                    continue
                if sign.sign_type in SYNCHRONOUS_TYPES:
                    self.chains.append(
                        ImplicativeChain(
                            links + (partner,),
                            steps + (ChainStep(sign, level + 1),),
                            ChainTerminal.SYNCHRONOUS_PAIR,
                        )
                    )
                    emitted = True
                    continue
                # asynchronous continuation
                if level + 1 > self.max_depth:
                    self._cut(
                        links, steps, "chain.depth", sign.uid,
                        f"depth bound {self.max_depth} truncates the chain",
                    )
                    emitted = True
                    continue
                new_links = links + (partner,)
                new_steps = steps + (ChainStep(sign, level + 1),)
                sub_emitted = self.expand(
                    partner, level + 1, new_links, new_steps,
                    visited | {partner.lexeme_id},
                )
                if compensation_base is None:
                    compensation_base = (new_links, new_steps)
                if not sub_emitted:
                    self._cut(
                        new_links, new_steps, "chain.dead_end", sign.uid,
                        "asynchronous path continues into no further sign",
                    )
                emitted = True

            for leaf in leaf_signs:
                if compensation_base is not None:
                    base_links, base_steps = compensation_base
                    leaf_level = base_steps[-1].level + 1
                else:
                    base_links, base_steps = links, steps
                    leaf_level = level + 1
                self.chains.append(
                    ImplicativeChain(
                        base_links,
                        base_steps + (ChainStep(leaf, leaf_level),),
                        _LEAF_TERMINALS[leaf.sign_type],
                    )
                )
                emitted = True
        return emitted


def build_chains(
    header_senses: Iterable[Sense],
    header_sign_uids: set[str],
    graph: SignGraph,
    model: LexiconModel,
    *,
    max_depth: int = 4,
) -> tuple[list[ImplicativeChain], list[Diagnostic]]:
    """All chains of one page, expanded breadth-wise from each header member."""
    anchors = list(header_senses)
    walk = _ChainWalk(model, graph, header_sign_uids, max_depth)
    visited = frozenset(s.lexeme_id for s in anchors)
    for anchor in anchors:
        walk.expand(anchor, 0, (anchor,), (), visited)
    return walk.chains, walk.diagnostics


def assign_polarization(chains: Iterable[ImplicativeChain]) -> dict[str, int]:
    """Sign uid -> page polarization level (minimum over chains showing it)."""
    levels: dict[str, int] = {}
    for chain in chains:
        for step in chain.steps:
            uid = step.sign.uid
            if uid not in levels or step.level < levels[uid]:
                levels[uid] = step.level
    return levels


def chain_to_json(chain: ImplicativeChain, model: LexiconModel) -> dict:
    return {
        "links": [
            {
                "sense_id": s.id,
                "lemma": model.lexeme_of(s).lemma,
                "language": model.lexeme_of(s).language.value,
            }
            for s in chain.links
        ],
        "steps": [
            {
                "sign": step.sign.uid,
                "sign_type": step.sign.sign_type.value,
                "level": step.level,
            }
            for step in chain.steps
        ],
        "terminal": chain.terminal.value,
    }
