import pytest

from kdirac.bgg import build_bgg, canonical_seed
from kdirac.dims import dim_module
from kdirac.errors import DominanceError, InvalidParameterError, StructuralError
from kdirac.hasse import HasseVertex
from kdirac.pushdown import (
    NO_IMAGE,
    DirectImage,
    ModuleDescriptor,
    build_complex,
    closed_descriptor,
    descriptor_from_weight,
    direct_image,
    direct_images,
    operator_order,
)
from kdirac.weights import ParabolicMarking, Weight, is_dominant


def W(*c):
    return Weight(len(c) - 2, c)


# direct images for k = 3 as (degree, doubled weight), keyed by (s, t)
K3_IMAGES = {
    (0, 0): (1, (-3, -3, -3, 1, -1)),
    (1, 0): (1, (-3, -3, -5, 1, 1)),
    (1, 1): None,
    (2, 0): None,
    (2, 1): (0, (-3, -5, -7, 1, 1)),
    (3, 0): (0, (-5, -5, -5, 3, 3)),
    (2, 2): (0, (-3, -7, -7, 1, -1)),
    (3, 1): (0, (-5, -5, -7, 3, 1)),
    (3, 2): (0, (-5, -7, -7, 3, -1)),
    (3, 3): (0, (-7, -7, -7, 3, -3)),
}


def test_direct_image_examples():
    assert direct_image(W(-3, -3, -3, -3, 3)) == DirectImage(1, W(-3, -3, -3, 1, -1))
    assert direct_image(W(-3, -3, -7, -1, 1)) == NO_IMAGE
    assert direct_image(W(-3, -5, -7, 1, 1)) == DirectImage(0, W(-3, -5, -7, 1, 1))


def test_k3_direct_images():
    images = direct_images(build_bgg(3))
    got = {(v.s, v.t): (img.degree, img.weight.coords2) if img.exists else None for v, img in images.items()}
    assert got == K3_IMAGES


def test_direct_image_requires_q_dominance():
    with pytest.raises(DominanceError):
        direct_image(W(-3, -1, -3, -3, 3))


def test_image_formatting():
    assert str(direct_image(W(-3, -3, -3, -3, 3))) == "[-3,-3,-3|1,-1]_1"
    assert str(NO_IMAGE) == "∅"


@pytest.mark.parametrize("k", range(2, 13))
def test_degree_pattern(k):
    d = build_bgg(k)
    for v, img in direct_images(d).items():
        lam = d[v]
        if v.row <= 1:
            assert img.degree == 1
            assert img.weight.coords2[:k] == lam.coords2[:k]
        elif v.row == 2:
            assert not img.exists
        else:
            assert img.degree == 0 and img.weight == lam
        if img.exists:
            assert is_dominant(img.weight, ParabolicMarking.P)


@pytest.mark.parametrize(
    "weight, slk, so4",
    [
        ((-3, -3, -5, 1, 1), (1, 1, 0), (0, 1)),
        ((-3, -3, -3, 1, -1), (0, 0, 0), (1, 0)),
        ((-5, -5, -5, 3, 3), (0, 0, 0), (0, 3)),
        ((-7, -7, -7, 3, -3), (0, 0, 0), (3, 0)),
    ],
)
def test_descriptor_from_weight(weight, slk, so4):
    m = descriptor_from_weight(W(*weight))
    assert m.slk_hw == slk and m.so4_hw == so4


def test_descriptor_names():
    assert descriptor_from_weight(W(-3, -3, -5, 1, 1)).name == "C^3(x)Sp_+"
    assert descriptor_from_weight(W(-3, -3, -3, 1, -1)).name == "Sp_-"


def test_descriptor_rejects_non_dominant_so4():
    with pytest.raises(DominanceError):
        descriptor_from_weight(W(-3, -3, -3, -3, 3))


def test_descriptor_rejects_nonintegral_slk():
    with pytest.raises(InvalidParameterError):
        descriptor_from_weight(W(-2, -3, -4, 1, 1))


def test_closed_descriptor_examples():
    assert closed_descriptor(3, 1, 3) == ModuleDescriptor.make((2, 1, 0), (0, 1))
    assert closed_descriptor(3, 3, 3) == descriptor_from_weight(W(-5, -5, -5, 3, 3))
    for k in (3, 4, 7):
        m = closed_descriptor(2 * k, 0, k)
        assert m.slk_hw == (0,) * k and m.so4_hw == (2 * k - 3, 0)
    assert closed_descriptor(6, 0, 3) == descriptor_from_weight(W(-7, -7, -7, 3, -3))
    m = closed_descriptor(1, 1, 5)
    assert m.name == "C^5(x)Sp_+" and m.dim == 10
    assert closed_descriptor(0, 0, 5).name == "Sp_-"


@pytest.mark.parametrize("i, j", [(2, 0), (2, 2), (3, 2), (7, 1), (4, 4), (-1, 1)])
def test_closed_descriptor_rejects(i, j):
    with pytest.raises(InvalidParameterError):
        closed_descriptor(i, j, 3)


@pytest.mark.parametrize("k", range(2, 11))
def test_closed_form_matches_weights(k):
    d = build_bgg(k)
    for v, img in direct_images(d).items():
        if v.row == 2:
            continue
        assert descriptor_from_weight(img.weight) == closed_descriptor(v.row, v.col, k)


@pytest.mark.parametrize(
    "src, dst, order",
    [
        ((-3, -3, -3, 1, -1), (-3, -3, -5, 1, 1), 1),
        ((-3, -3, -5, 1, 1), (-3, -5, -7, 1, 1), 2),
        ((-3, -5, -7, 1, 1), (-3, -7, -7, 1, -1), 1),
    ],
)
def test_operator_order(src, dst, order):
    assert operator_order(W(*src), W(*dst)) == order


def test_operator_order_errors():
    with pytest.raises(StructuralError):
        operator_order(W(-3, -5, -7, 1, 1), W(-3, -3, -5, 1, 1))
    with pytest.raises(InvalidParameterError):
        operator_order(canonical_seed(3), canonical_seed(4))


def test_complex_k3():
    cx = build_complex(3)
    assert cx.positions == [0, 1, 3, 4, 5, 6]
    assert cx.widths == [1, 1, 2, 2, 1, 1]
    assert cx.orders == (1, 2, 1, 1, 1)


def test_complex_k2():
    cx = build_complex(2)
    assert cx.positions == [0, 1, 3, 4]
    assert cx.widths == [1, 1, 1, 1]


def test_complex_k5():
    cx = build_complex(5)
    assert cx.positions == [0, 1, 3, 4, 5, 6, 7, 8, 9, 10]
    assert cx.widths == [1, 1, 2, 3, 3, 3, 2, 2, 1, 1]
    assert cx.terms[0].modules[0].name == "Sp_-"
    assert cx.terms[1].modules[0].name == "C^5(x)Sp_+"
    assert cx.terms[0].modules[0] == ModuleDescriptor.make((0,) * 5, (1, 0))


@pytest.mark.parametrize("k", range(2, 13))
def test_orders(k):
    cx = build_complex(k)
    assert len(cx.terms) == 2 * k
    assert cx.orders == (1, 2) + (1,) * (2 * k - 3)


def test_modules_carry_dimensions():
    cx = build_complex(4)
    for t in cx.terms:
        for m in t.modules:
            assert m.dim == dim_module(m)


def test_first_term_vertex():
    cx = build_complex(3)
    assert cx.terms[0].vertices == (HasseVertex(0, 0),)
