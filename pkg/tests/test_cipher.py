"""Cipher core tests: tables, f-function, key schedule, rounds, blocks.

Expected values come from three independent places: the published 4-bit
tables, hand-derived vectors, and the straight-line trace oracle in
``reference_trace``.
"""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import reference_trace as trace
from sitcipher import cipher

u16 = st.integers(0, 0xFFFF)
u64 = st.integers(0, 0xFFFFFFFFFFFFFFFF)
segments4 = st.tuples(u16, u16, u16, u16)


class TestSubstitutionTables:
    def test_p_entries(self):
        for x in range(16):
            assert cipher.p_sub(x) == trace.P[x]

    def test_q_entries(self):
        for x in range(16):
            assert cipher.q_sub(x) == trace.Q[x]

    def test_spot_values(self):
        assert cipher.p_sub(0x0) == 0x3
        assert cipher.p_sub(0xF) == 0x1
        assert cipher.q_sub(0x0) == 0x9
        assert cipher.q_sub(0xF) == 0x8

    def test_bijections(self):
        assert sorted(cipher.P_TABLE) == list(range(16))
        assert sorted(cipher.Q_TABLE) == list(range(16))

    def test_involutions(self):
        for x in range(16):
            assert cipher.p_sub(cipher.p_sub(x)) == x
            assert cipher.q_sub(cipher.q_sub(x)) == x
        assert cipher.p_sub(cipher.p_sub(0x7)) == 0x7
        assert cipher.q_sub(cipher.q_sub(0xB)) == 0xB


class TestFFunction:
    def test_frozen_vectors(self):
        assert cipher.f_function(0x0000) == 0x4998
        assert cipher.f_function(0xFFFF) == 0x4934

    def test_matches_trace_sample(self):
        # every 37th input plus the corners; the full 65,536-input sweep
        # runs in the acceptance suite
        for x in list(range(0, 1 << 16, 37)) + [0x0001, 0x8000, 0xFFFF]:
            assert cipher.f_function(x) == trace.f_trace(x)

    def test_bijection(self):
        assert len(set(cipher.F_TABLE)) == 1 << 16

    @given(u16)
    def test_involution(self, x):
        assert cipher.f_function(cipher.f_function(x)) == x


class TestKeySchedule:
    def test_gather_zero_key(self):
        for i in (1, 2, 3, 4):
            assert cipher.gather_key_nibbles(0, i) == 0

    def test_gather_pattern_key(self):
        assert cipher.gather_key_nibbles(0x0123456789ABCDEF, 1) == 0x048C
        assert cipher.gather_key_nibbles(0x0123456789ABCDEF, 4) == 0x37BF

    @pytest.mark.parametrize("i", [0, 5, -1])
    def test_gather_rejects_bad_index(self, i):
        with pytest.raises(ValueError):
            cipher.gather_key_nibbles(0, i)

    def test_permute_zeros(self):
        for i in (1, 2, 3, 4):
            assert cipher.permute_round_key(0, i) == 0

    def test_permute_vectors(self):
        assert cipher.permute_round_key(0x4998, 1) == 0x2998
        assert cipher.permute_round_key(0x4998, 2) == 0x7106

    def test_permute_is_bit_permutation(self):
        # single set bits map to single set bits, all distinct
        for i in (1, 2, 3, 4):
            images = {cipher.permute_round_key(1 << b, i) for b in range(16)}
            assert len(images) == 16
            assert all(v.bit_count() == 1 for v in images)

    @pytest.mark.parametrize("i", [0, 5])
    def test_permute_rejects_bad_index(self, i):
        with pytest.raises(ValueError):
            cipher.permute_round_key(0, i)

    def test_zero_key_expansion(self):
        assert cipher.expand_key(0) == (0x2998, 0x7106, 0x4991, 0xE806, 0xF909)

    @given(u64)
    def test_fifth_key_is_xor_of_first_four(self, kc):
        keys = cipher.expand_key(kc)
        assert keys.k5 == keys.k1 ^ keys.k2 ^ keys.k3 ^ keys.k4

    @given(u64)
    def test_matches_trace(self, kc):
        assert list(cipher.expand_key(kc)) == trace.round_keys_trace(kc)

    @pytest.mark.parametrize("kc", [-1, 1 << 64])
    def test_rejects_out_of_range_key(self, kc):
        with pytest.raises(ValueError):
            cipher.expand_key(kc)


class TestRoundOperations:
    @given(u16, u16)
    def test_xnor_self_inverse(self, a, k):
        assert cipher.xnor16(cipher.xnor16(a, k), k) == a

    def test_round_on_zero_block_zero_key(self):
        out = cipher.encrypt_round((0, 0, 0, 0), 0)
        assert out == (0xFFFF, 0x4934, 0x4934, 0xFFFF)

    def test_invert_round_on_zero_example(self):
        assert cipher.invert_round((0xFFFF, 0x4934, 0x4934, 0xFFFF), 0) == (0, 0, 0, 0)

    @given(segments4, u16)
    def test_invert_round_inverts(self, p, k):
        assert cipher.invert_round(cipher.encrypt_round(p, k), k) == p

    def test_transform_swaps_pairs(self):
        assert cipher.apply_round_transform(("a", "b", "c", "d")) == ("b", "a", "d", "c")

    @given(segments4)
    def test_transform_is_involution(self, r):
        assert cipher.apply_round_transform(cipher.apply_round_transform(r)) == r

    def test_transform_fixes_equal_segments(self):
        assert cipher.apply_round_transform((7, 7, 7, 7)) == (7, 7, 7, 7)


class TestBlockCipher:
    def test_known_answers(self, known_answers):
        for key, plaintext, ciphertext in known_answers:
            keys = cipher.expand_key(key)
            assert cipher.encrypt_block(plaintext, keys) == ciphertext
            assert cipher.decrypt_block(ciphertext, keys) == plaintext

    def test_canonical_zero_vector_is_frozen(self, known_answers):
        assert known_answers[0] == (0, 0, 0xEFB34F804F80EFB3)

    @given(u64)
    def test_split_join_roundtrip(self, block):
        assert cipher.join_block(cipher.split_block(block)) == block

    @given(u64, u64)
    def test_roundtrip(self, kc, plaintext):
        keys = cipher.expand_key(kc)
        assert cipher.decrypt_block(cipher.encrypt_block(plaintext, keys), keys) == plaintext

    def test_matches_trace_random(self):
        rnd = random.Random(0xC0FFEE)
        for _ in range(200):
            kc = rnd.getrandbits(64)
            plaintext = rnd.getrandbits(64)
            expected = trace.encrypt_trace(plaintext, trace.round_keys_trace(kc))
            assert cipher.encrypt_block(plaintext, cipher.expand_key(kc)) == expected

    def test_encryption_is_deterministic(self):
        keys = cipher.expand_key(0x1122334455667788)
        assert cipher.encrypt_block(42, keys) == cipher.encrypt_block(42, keys)

    @pytest.mark.parametrize("block", [-1, 1 << 64])
    def test_rejects_out_of_range_block(self, block):
        keys = cipher.expand_key(0)
        with pytest.raises(ValueError):
            cipher.encrypt_block(block, keys)
        with pytest.raises(ValueError):
            cipher.decrypt_block(block, keys)
