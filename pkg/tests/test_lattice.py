"""Wedge-square blocks of the parabolic matrices, the relation system and
its elimination, and the quadratic shape constraints."""

from hypothesis import given, settings
from hypothesis import strategies as st

from g2forge import lattice
from g2forge.algebra import RFrac, SymMatrix

small_ints = st.integers(min_value=-4, max_value=4)


def int_matrix(vals, n):
    return SymMatrix([[RFrac.const(vals[n * i + j]) for j in range(n)] for i in range(n)])


class TestFunctoriality:
    @given(st.lists(small_ints, min_size=50, max_size=50))
    @settings(max_examples=15, deadline=None)
    def test_wedge_square_multiplicative(self, vals):
        m = int_matrix(vals[:25], 5)
        n = int_matrix(vals[25:], 5)
        assert lattice.wedge2_standard(m * n) == lattice.wedge2_standard(m) * lattice.wedge2_standard(n)

    def test_wedge_square_of_identity(self):
        assert lattice.wedge2_standard(SymMatrix.identity(5)) == SymMatrix.identity(10)

    @given(st.lists(small_ints, min_size=8, max_size=8))
    @settings(max_examples=20, deadline=None)
    def test_sym_cube_multiplicative(self, vals):
        m = int_matrix(vals[:4], 2)
        n = int_matrix(vals[4:], 2)
        assert lattice.sym_cube_signed(m * n) == lattice.sym_cube_signed(m) * lattice.sym_cube_signed(n)


class TestFiveDimBlock:
    def test_report(self):
        rep = lattice.five_dim_wedge_report()
        assert rep["top_row_matches_c_polynomials"]
        assert rep["below_block_vanishes"]
        assert rep["wedge_block_equals_sym_cube"]

    def test_transcription_divergence_is_isolated(self):
        rep = lattice.five_dim_wedge_report()
        assert rep["displayed_block_mismatch_cells"] == [(3, 3), (5, 4)]


class TestFourDimBlock:
    def test_invariant_plane(self):
        rep = lattice.four_dim_wedge_report()
        assert rep["col1_is_inverse_det_times_v2v1"]
        assert rep["col2_v2v1_coeff_equals_rel2_over_d"]
        assert rep["col4_diagonal_is_one"]
        assert rep["col4_other_entries_zero"]
        assert rep["col4_v2v1_matches_formula"]

    def test_star_identity_modulo_relations(self):
        rep = lattice.four_dim_wedge_report()
        assert rep["col2_vanishes_mod_relations"]
        assert rep["col4_star_identity_mod_relations"]


class TestElimination:
    def test_natural_determinant(self):
        rep = lattice.relation_elimination()
        assert rep["det_natural_is_minus_9d3"]
        assert rep["elimination_preserves_det"]

    def test_transcribed_system_divergence(self):
        rep = lattice.relation_elimination()
        assert not rep["det_displayed_system_is_minus_9d3"]
        assert rep["det_displayed_system_factored"]
        assert rep["det_displayed_eliminated_is_plus_9d3"]


class TestShapeConstraintProbe:
    def test_families_do_not_vanish_identically(self):
        rep = lattice.form_constraint_probe(2)
        assert rep["products_checked"] == 72
        counts = rep["vanishing_product_counts"]
        assert all(c < rep["products_checked"] for c in counts.values())
        assert rep["nonvanishing_examples"]
