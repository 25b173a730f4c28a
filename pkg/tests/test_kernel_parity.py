import os
import random
import subprocess
import sys

import pytest

import convexia._purecore as pure
from convexia.generators import random_graph, random_tree

fast = pytest.importorskip("convexia._fastcore",
                           reason="compiled kernel not built")


def test_backend_names():
    assert pure.BACKEND == "pure"
    assert fast.BACKEND == "compiled"


def test_bitmask_kernel_parity():
    rng = random.Random(0)
    for _ in range(150):
        n = rng.randint(1, 12)
        g = random_graph(n, rng.random(), rng)
        masks = g.masks
        assert fast.all_pairs_dist(n, masks) == pure.all_pairs_dist(n, masks)
        assert fast.geodesic_pair_masks(n, masks) == \
            pure.geodesic_pair_masks(n, masks)
        assert fast.chordless_pair_masks(n, masks) == \
            pure.chordless_pair_masks(n, masks)
        assert bytes(fast.connected_mask_table(n, masks)) == \
            bytes(pure.connected_mask_table(n, masks))


def test_tree_dp_parity_including_witness():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.randint(1, 60)
        t = random_tree(n, rng)
        offs, nbrs = t.csr()
        vf, sf = fast.tree_g2(n, offs, nbrs)
        vp, sp = pure.tree_g2(n, offs, nbrs)
        assert vf == vp
        assert list(sf) == list(sp)  # identical tie-breaking


def test_tree_dp_rejects_disconnected_input():
    from convexia.graph import Graph
    g = Graph(4, [(0, 1), (2, 3)])
    offs, nbrs = g.csr()
    with pytest.raises(ValueError):
        fast.tree_g2(4, offs, nbrs)
    with pytest.raises(ValueError):
        pure.tree_g2(4, offs, nbrs)


def test_env_var_forces_pure_backend():
    env = dict(os.environ, CONVEXIA_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import convexia; print(convexia.BACKEND)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"
    env.pop("CONVEXIA_PURE")
    out = subprocess.run(
        [sys.executable, "-c", "import convexia; print(convexia.BACKEND)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "compiled"
