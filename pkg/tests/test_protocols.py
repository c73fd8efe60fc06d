import numpy as np
import pytest

from spinsim import (
    BinaryRecursive,
    NonMaxEntangled,
    PAdicComposite,
    RandomStream,
    SharedRandomness,
    Spin,
    TonerBacon,
    binary_digits,
    draw_shared_randomness,
    nonmax_round,
    protocol1_resources,
    protocol1_round,
    protocol2_resources,
    protocol2_round,
    sample_unit_sphere,
    toner_bacon_round,
)
from spinsim.errors import ResourceMismatchError, UnsupportedRegimeError
from spinsim.protocols import nonmax_mixing_length

Z = np.array([0.0, 0.0, 1.0])


def test_toner_bacon_deterministic_case():
    out = toner_bacon_round(Z, Z, Z, Z)
    assert out.alpha == -0.5
    assert out.cbits[0] == 1.0
    assert out.beta == 0.5


def test_binary_digits():
    assert binary_digits(7) == [1, 1, 1]
    assert binary_digits(2) == [1, 0]
    assert binary_digits(9) == [1, 0, 0, 1]
    with pytest.raises(ValueError):
        binary_digits(0)


@pytest.mark.parametrize("s,expected", [
    ("1/2", (1, 1, 1, 0)),
    ("1", (1, 1, 1, 1)),
    ("3/2", (2, 2, 2, 0)),
    ("2", (2, 2, 2, 1)),
    ("5/2", (2, 2, 2, 1)),
    ("3", (2, 2, 2, 2)),
    ("4", (3, 3, 3, 1)),
])
def test_protocol1_resources(s, expected):
    res = protocol1_resources(Spin.of(s))
    assert (res.n_cbits, res.n_lambda, res.n_mu, res.n_nu) == expected


def test_protocol1_cbit_count_formula():
    for twice_s in range(1, 25):
        spin = Spin(twice_s)
        expected = int(np.ceil(np.log2(spin.s + 1)))
        assert protocol1_resources(spin).n_cbits == expected


def test_protocol1_half_spin_reduces_to_toner_bacon():
    stream = RandomStream(5)
    lam = sample_unit_sphere(stream, 200)
    mu = sample_unit_sphere(stream, 200)
    a = np.array([0.6, 0.0, 0.8])
    b = np.array([0.0, 0.28, 0.96])
    tb = toner_bacon_round(a, b, lam, mu)
    p1 = protocol1_round(Spin(1), a, b, SharedRandomness([lam], [mu], []))
    assert np.array_equal(tb.alpha, p1.alpha)
    assert np.array_equal(tb.beta, p1.beta)
    assert np.array_equal(tb.cbits[0], p1.cbits[0])


def test_protocol1_resource_mismatch():
    bundle = draw_shared_randomness(1, 1, 0, RandomStream(0), 10)
    with pytest.raises(ResourceMismatchError):
        protocol1_round(Spin(2), Z, Z, bundle)


def test_protocol1_outcomes_in_ladder_and_transcript_length():
    rng_stream = RandomStream(11)
    for s in ("1/2", "1", "3/2", "2", "5/2", "3", "4"):
        spin = Spin.of(s)
        res = protocol1_resources(spin)
        bundle = draw_shared_randomness(res.n_lambda, res.n_mu, res.n_nu, rng_stream, 500)
        out = protocol1_round(spin, Z, np.array([1.0, 0, 0]), bundle)
        assert len(out.cbits) == res.n_cbits
        ladder = set(np.round(2 * spin.ladder()).astype(int))
        assert set(np.round(2 * out.alpha).astype(int)) <= ladder
        assert set(np.round(2 * out.beta).astype(int)) <= ladder
        for c in out.cbits:
            assert set(np.unique(c)) <= {-1.0, 1.0}


@pytest.mark.parametrize("P,n,expected_cbits", [(2, 3, 3), (3, 2, 2), (3, 1, 1), (2, 2, 2)])
def test_protocol2_resources(P, n, expected_cbits):
    assert protocol2_resources(P, n).n_cbits == expected_cbits


def test_protocol2_cbits_beat_protocol1_at_s4():
    assert protocol2_resources(3, 2).n_cbits == 2
    assert protocol1_resources(Spin.of(4)).n_cbits == 3


def test_protocol2_equals_protocol1_for_n1():
    # with identical randomness the two protocols coincide when 2s+1 = P
    stream = RandomStream(21)
    spin = Spin(2)  # P = 3
    res = protocol1_resources(spin)
    bundle = draw_shared_randomness(res.n_lambda, res.n_mu, res.n_nu, stream, 300)
    a = np.array([0.8, 0.0, 0.6])
    b = np.array([0.0, 1.0, 0.0])
    direct = protocol1_round(spin, a, b, bundle)
    composed = protocol2_round(3, 1, a, b, [bundle])
    assert np.array_equal(direct.alpha, composed.alpha)
    assert np.array_equal(direct.beta, composed.beta)


def test_protocol2_transcript_concatenation():
    stream = RandomStream(31)
    sub_res = protocol1_resources(Spin(2))
    bundles = [draw_shared_randomness(sub_res.n_lambda, sub_res.n_mu, sub_res.n_nu, stream, 50)
               for _ in range(2)]
    out = protocol2_round(3, 2, Z, np.array([1.0, 0, 0]), bundles)
    assert len(out.cbits) == 2
    with pytest.raises(ResourceMismatchError):
        protocol2_round(3, 2, Z, Z, bundles[:1])


def test_nonmax_mixing_length_value():
    # a_z = 0, gamma = pi/8 -> l = sqrt(1 - sqrt(2)/2)
    assert nonmax_mixing_length(np.pi / 8, 0.0) == pytest.approx(
        np.sqrt(1 - np.sqrt(2) / 2), abs=1e-12)


def test_nonmax_validity_checks():
    a = np.array([0.0, 0.6, 0.8])  # large a_z
    b = np.array([1.0, 0.0, 0.0])
    lam = sample_unit_sphere(RandomStream(1), 10)
    with pytest.raises(UnsupportedRegimeError):
        nonmax_round(0.5, a, b, lam, lam, lam)  # constraint violated
    with pytest.raises(UnsupportedRegimeError):
        nonmax_round(0.3, np.array([1.0, 0, 0]), np.array([0.0, 0.6, 0.8]),
                     lam, lam, lam)  # b outside the x-y plane
    with pytest.raises(UnsupportedRegimeError):
        NonMaxEntangled(1.0)


def test_protocol_kind_spins():
    assert TonerBacon().spin == Spin(1)
    assert BinaryRecursive(Spin(5)).spin == Spin(5)
    assert PAdicComposite(3, 2).spin == Spin.of(4)
    assert NonMaxEntangled(0.3).spin == Spin(1)


@pytest.mark.parametrize("kind,spin", [
    ("tb", Spin(1)), ("binary", Spin(3)), ("binary", Spin(4)), ("padic", Spin(2)),
])
def test_transcript_privacy_and_zero_means(kind, spin):
    # cbits must carry no information about the sender's output, and the
    # singlet outputs are mean-zero
    from spinsim import run_round
    from spinsim.mc import empirical_mutual_information
    from spinsim.protocols import PAdicComposite as PAC

    n = 1_000_000
    stream = RandomStream(2024, spin.twice_s)
    a = np.array([0.36, 0.48, 0.8])
    b = np.array([0.0, 0.6, -0.8])
    if kind == "tb":
        protocol = TonerBacon()
        res = protocol.resources()
        shared = draw_shared_randomness(res.n_lambda, res.n_mu, res.n_nu, stream, n)
    elif kind == "binary":
        protocol = BinaryRecursive(spin)
        res = protocol.resources()
        shared = draw_shared_randomness(res.n_lambda, res.n_mu, res.n_nu, stream, n)
    else:
        protocol = PAC(3, 1)
        sub = protocol1_resources(Spin(2))
        shared = [draw_shared_randomness(sub.n_lambda, sub.n_mu, sub.n_nu, stream, n)]
    out = run_round(protocol, a, b, shared)
    alpha_symbol = np.rint(2 * out.alpha).astype(int)
    for c in out.cbits:
        assert empirical_mutual_information(c, alpha_symbol) < 1e-3
    for values in (out.alpha, out.beta):
        z = np.mean(values) / (np.std(values, ddof=1) / np.sqrt(n))
        assert abs(z) < 4.0
