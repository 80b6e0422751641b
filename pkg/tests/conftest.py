import pytest

from taitcount import generate


@pytest.fixture(scope="session")
def triangle():
    return generate("triangle")


@pytest.fixture(scope="session")
def k4():
    return generate("k4")


@pytest.fixture(scope="session")
def bipyramid3():
    return generate("bipyramid", size=3)


@pytest.fixture(scope="session")
def octahedron():
    return generate("octahedron")


@pytest.fixture(scope="session")
def apollonian1():
    return generate("apollonian", depth=1)


@pytest.fixture(scope="session")
def icosahedron():
    return generate("icosahedron")


def face_two_coloring(g):
    """2-color faces so adjacent faces differ, or None if impossible (BFS)."""
    adj = [[] for _ in g.faces]
    for f1, f2 in g.edge_faces:
        adj[f1].append(f2)
        adj[f2].append(f1)
    color = [None] * len(g.faces)
    for start in range(len(g.faces)):
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for h in adj[f]:
                if color[h] is None:
                    color[h] = 1 - color[f]
                    stack.append(h)
                elif color[h] == color[f]:
                    return None
    return color
