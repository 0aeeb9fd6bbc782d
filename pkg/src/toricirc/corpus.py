"""Named configurations and multigraphs used by the tests and demos."""

from __future__ import annotations

from pathlib import Path

from .circuits import Configuration
from .graphs import Multigraph, incidence_configuration

GRAPHS: dict[str, Multigraph] = {
    "c4": Multigraph(4, ((1, 2), (2, 3), (3, 4), (1, 4))),
    "c6": Multigraph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6))),
    "k4": Multigraph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    "triangle": Multigraph(3, ((1, 2), (2, 3), (1, 3))),
    "triangle_loop": Multigraph(3, ((1, 2), (2, 3), (1, 3), (1, 1))),
    # triangles {1,2,3} and {5,6,7} joined by the path 3-4-5
    "bridge2": Multigraph(7, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7))),
    # triangles {1,2,3} and {4,5,6} joined by the edge 3-4
    "bridge1": Multigraph(6, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6))),
    "bowtie": Multigraph(5, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5))),
    "double_loop": Multigraph(1, ((1, 1), (1, 1))),
    "loops_joined": Multigraph(2, ((1, 1), (2, 2), (1, 2))),
    "loops_path2": Multigraph(3, ((1, 1), (3, 3), (1, 2), (2, 3))),
    "digon": Multigraph(2, ((1, 2), (1, 2))),
    "theta": Multigraph(4, ((1, 2), (2, 3), (3, 4), (1, 4), (1, 3))),
    "c4_parallel": Multigraph(4, ((1, 2), (2, 3), (3, 4), (1, 4), (1, 2))),
    "pentagon_chord": Multigraph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3))),
    "k23": Multigraph(5, ((1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))),
    "triangle_pendant_loop": Multigraph(4, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 4))),
}

CONFIGURATIONS: dict[str, Configuration] = {
    "twisted_cubic": Configuration(((3, 0), (2, 1), (1, 2), (0, 3))),
    "identity2": Configuration(((1, 0), (0, 1))),
    "segment": Configuration(((1, 0), (0, 1), (1, 1))),
    "rational_normal_quartic": Configuration(((4, 0), (3, 1), (2, 2), (1, 3), (0, 4))),
    "square": Configuration(((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1))),
}
for _name in ("c4", "c6", "k4", "triangle_loop", "bridge2", "bridge1", "bowtie"):
    CONFIGURATIONS[_name] = incidence_configuration(GRAPHS[_name])

# The six named members every acceptance check covers.
NAMED = ("c4", "c6", "k4", "triangle_loop", "twisted_cubic", "bridge2")


def matrix_text(C: Configuration, comment: str = "") -> str:
    head = f"# {comment}\n" if comment else ""
    return head + C.matrix.to_text()


def write_corpus(directory) -> list[Path]:
    """Write every corpus member as ``<name>.mat`` or ``<name>.graph``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, C in CONFIGURATIONS.items():
        p = d / f"{name}.mat"
        p.write_text(matrix_text(C, name))
        paths.append(p)
    for name, G in GRAPHS.items():
        p = d / f"{name}.graph"
        p.write_text(f"# {name}\n" + G.to_text())
        paths.append(p)
    return sorted(paths)
