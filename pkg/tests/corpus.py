"""Named lattices shared across the suite."""

from __future__ import annotations

import ortholat as ol

TWO_BLOCKS = [["p", "q", "r"], ["r", "s", "t"]]
CHAIN_BLOCKS = [["p", "q", "r"], ["r", "s", "t"], ["t", "u", "v"]]
PENTAGON_BLOCKS = [["a", "b", "c"], ["c", "d", "e"], ["e", "f", "g"],
                   ["g", "h", "i"], ["i", "j", "a"]]
SMALL_BLOCKS = [["a", "b"], ["b", "c"]]
TRIANGLE_BLOCKS = [["a", "b", "c"], ["c", "d", "e"], ["e", "f", "a"]]
SQUARE_BLOCKS = [["a", "b", "c"], ["c", "d", "e"], ["e", "f", "g"], ["g", "h", "a"]]


def paste(blocks, allow_violations=False) -> ol.OrthoLattice:
    return ol.greechie_paste(ol.diagram_from_blocks(blocks),
                             allow_violations=allow_violations)


def build_families() -> list[tuple[str, ol.OrthoLattice]]:
    fams = [(f"boolean{k}", ol.gen_boolean(k)) for k in range(1, 5)]
    fams += [(f"mo{m}", ol.gen_mo(m)) for m in range(1, 7)]
    fams.append(("o6", ol.gen_o6()))
    fams += [("subspace3", ol.gen_subspace_mo(3)), ("subspace7", ol.gen_subspace_mo(7))]
    fams += [
        ("paste-two-blocks", paste(TWO_BLOCKS)),
        ("paste-chain", paste(CHAIN_BLOCKS)),
        ("paste-pentagon", paste(PENTAGON_BLOCKS)),
        ("paste-small", paste(SMALL_BLOCKS)),
    ]
    return fams


FAMILIES = build_families()
FAMILY_LATTICES = [L for _, L in FAMILIES]
O6 = ol.gen_o6()

# O6 element indices, fixed by the generator layout
BOT, A, B, B_C, A_C, TOP = range(6)
