import json

import pytest

from sidh_torsion.errors import InvalidInstance
from sidh_torsion.sidh import (PublicKey, SidhInstance, brute_force_recover, build_instance,
                               check_instance, keygen, make_secret, pairing_check, public_key_for,
                               shared_secret, verify_kernel)
from sidh_torsion.zmod2 import cyclic_reps


@pytest.mark.parametrize("params", [(59, 3, 5, 4), (3119, 16, 65, 3)])
def test_key_exchange_and_recovery(params):
    inst = build_instance(*params, seed=0)
    assert check_instance(inst)
    for seed in range(6):
        sa, pa = keygen(inst, seed, "A")
        sb, pb = keygen(inst, seed + 100, "B")
        assert shared_secret(inst, sa, pb) == shared_secret(inst, sb, pa)
        assert pairing_check(inst, pa)
        assert brute_force_recover(inst, pa)[0] == sa


def test_verify_kernel_only_accepts_planted(inst3119):
    sec = make_secret(3, 5, 16)
    pk = public_key_for(inst3119, sec)
    hits = [r for r in cyclic_reps(16) if verify_kernel(inst3119, pk, *r)]
    assert hits == [(sec.s, sec.t)]


def test_json_roundtrip(inst59):
    data = json.loads(json.dumps(inst59.to_json()))
    assert SidhInstance.from_json(data) == inst59
    _, pk = keygen(inst59, 1)
    assert PublicKey.from_json(json.loads(json.dumps(pk.to_json()))) == pk


def test_forged_mode_and_validation():
    inst = build_instance(59, 3, 25, mode="forged")
    assert inst.PA is None and SidhInstance.from_json(inst.to_json()) == inst
    with pytest.raises(InvalidInstance):
        build_instance(61, 3, 5)
    with pytest.raises(InvalidInstance):
        build_instance(59, 3, 6)
    with pytest.raises(InvalidInstance):
        build_instance(59, 3, 5, f=3)


def test_secret_x():
    assert make_secret(1, 4, 5).x == 4
    assert make_secret(5, 1, 25).x is None
