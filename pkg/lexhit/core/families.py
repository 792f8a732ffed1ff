"""
Independent Family problems: brute-force solvers and the reductions between them.

Both problems ask for sets whose union covers no forbidden set. The multicoloured
variant picks one set per colour; the single-coloured variant picks ``k`` sets from
one list.
"""

import itertools
import logging
from typing import Iterable, List, Sequence, Set, Tuple

from ..exceptions import LexHitUsageError
from ..models.circuits import Antimonotone3NFormula
from ..models.families import FamilySolution, MultiColouredInstance, SingleColouredInstance
from ..models.sets import VertexSet

logger = logging.getLogger(__name__)


def _covers_none(union: int, forbidden: Sequence[int]) -> bool:
    return all(t & ~union for t in forbidden)


def solve_mcif_bruteforce(inst: MultiColouredInstance) -> FamilySolution:
    """
    Try every one-set-per-colour selection.

    Returns:
        FamilySolution with the chosen position per colour when some union covers no
        forbidden set; false when a colour has no sets
    """
    lists = [[s.bits for s in colour] for colour in inst.colours]
    forbidden = [t.bits for t in inst.forbidden]
    examined = 0
    for choice in itertools.product(*(range(len(lst)) for lst in lists)):
        examined += 1
        union = 0
        for lst, position in zip(lists, choice):
            union |= lst[position]
        if _covers_none(union, forbidden):
            return FamilySolution(value=True, selection=choice, selections_examined=examined)
    return FamilySolution(value=False, selections_examined=examined)


def solve_if_bruteforce(inst: SingleColouredInstance) -> FamilySolution:
    """
    Try every selection of ``k`` candidates.

    Selections are k-combinations of list positions, or k-multisets when the instance
    allows repetition.
    """
    sets = [s.bits for s in inst.candidates]
    forbidden = [t.bits for t in inst.forbidden]
    picker = (
        itertools.combinations_with_replacement if inst.allow_repetition else itertools.combinations
    )
    examined = 0
    for choice in picker(range(len(sets)), inst.k):
        examined += 1
        union = 0
        for position in choice:
            union |= sets[position]
        if _covers_none(union, forbidden):
            return FamilySolution(value=True, selection=choice, selections_examined=examined)
    return FamilySolution(value=False, selections_examined=examined)


def _fresh_names(existing: Iterable[str], wanted: Sequence[str]) -> List[str]:
    taken: Set[str] = set(existing)
    out = []
    for name in wanted:
        while name in taken:
            name += "'"
        taken.add(name)
        out.append(name)
    return out


def _pairs(ids: Sequence[int], n: int) -> List[VertexSet]:
    return [VertexSet.of(n, pair) for pair in itertools.combinations(ids, 2)]


def mcif_to_if(inst: MultiColouredInstance) -> SingleColouredInstance:
    """
    Pool all colours into one list, tagging each set with a fresh element.

    The set at position ``j`` of colour ``i`` gains the element ``x[j,i]``; tags are
    appended after the universe colour by colour. Every pair of tags of one colour
    becomes forbidden, so any valid selection takes exactly one set per colour.
    """
    base = inst.universe_size
    tags: List[Tuple[int, int]] = [
        (j, i) for i, colour in enumerate(inst.colours, 1) for j in range(1, len(colour) + 1)
    ]
    names = [*inst.names, *_fresh_names(inst.names, [f"x[{j},{i}]" for j, i in tags])]
    n = len(names)

    candidates = []
    forbidden = [VertexSet(n, t.bits) for t in inst.forbidden]
    tag_id = base
    for colour in inst.colours:
        colour_tags = []
        for s in colour:
            candidates.append(VertexSet(n, s.bits | 1 << tag_id))
            colour_tags.append(tag_id)
            tag_id += 1
        forbidden.extend(_pairs(colour_tags, n))

    out = SingleColouredInstance(
        names=tuple(names),
        candidates=tuple(candidates),
        forbidden=tuple(forbidden),
        k=inst.k,
    )
    logger.debug("mcif -> if: %d candidates, %d forbidden", len(candidates), len(forbidden))
    return out


def if_to_mcif(inst: SingleColouredInstance) -> MultiColouredInstance:
    """
    Make ``k`` tagged copies of the list, one per colour.

    Copy ``i`` of the set at position ``j`` gains the element ``x[j,i]``. Unless the
    instance allows repetition, the tags of one set across colours are pairwise
    forbidden so that no set is picked twice.
    """
    base = inst.universe_size
    count = len(inst.candidates)
    tags = [(j, i) for i in range(1, inst.k + 1) for j in range(1, count + 1)]
    names = [*inst.names, *_fresh_names(inst.names, [f"x[{j},{i}]" for j, i in tags])]
    n = len(names)

    def tag_id(j: int, i: int) -> int:
        return base + i * count + j

    colours = tuple(
        tuple(VertexSet(n, s.bits | 1 << tag_id(j, i)) for j, s in enumerate(inst.candidates))
        for i in range(inst.k)
    )
    forbidden = [VertexSet(n, t.bits) for t in inst.forbidden]
    if not inst.allow_repetition:
        for j in range(count):
            forbidden.extend(_pairs([tag_id(j, i) for i in range(inst.k)], n))

    return MultiColouredInstance(names=tuple(names), colours=colours, forbidden=tuple(forbidden))


def wa3ns_to_if(f: Antimonotone3NFormula, k: int) -> SingleColouredInstance:
    """
    Encode weight-``k`` satisfiability of an antimonotone 3-normalised formula.

    The universe is the set of terms; each variable contributes the set of terms it
    occurs in; each subformula contributes the set of its terms as a forbidden set.

    Raises:
        LexHitUsageError: If ``k`` is smaller than 1
    """
    if k < 1:
        raise LexHitUsageError(f"k must be at least 1, got {k}", {"k": k})
    term_ids = f.term_ids()
    position = {term: index for index, term in enumerate(term_ids)}
    n = len(term_ids)

    occurs: List[int] = [0] * len(f.variables)
    for h, terms in enumerate(f.subformulas):
        for i, term in enumerate(terms):
            for var in term:
                occurs[var] |= 1 << position[(h, i)]

    forbidden = [
        VertexSet.of(n, (position[(h, i)] for i in range(len(terms))))
        for h, terms in enumerate(f.subformulas)
    ]
    return SingleColouredInstance(
        names=tuple(f"t{h + 1}.{i + 1}" for h, i in term_ids),
        candidates=tuple(VertexSet(n, bits) for bits in occurs),
        forbidden=tuple(forbidden),
        k=k,
        candidate_labels=f.variables,
    )
