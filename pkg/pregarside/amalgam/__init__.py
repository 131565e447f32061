from pregarside.amalgam.coset import canonical_word, m_T_P
from pregarside.amalgam.node import FcNode, GarsideLeaf
from pregarside.amalgam.normal_form import (
    AmalgamNF, GroupAmalgamNF, amalgam_mul, amalgam_nf, ell_N,
    group_amalgam_nf, initial_pieces, reduce_pieces)
from pregarside.amalgam.reduction import PreExpression, m_star_T_P
from pregarside.amalgam.tree import (
    AmalgamNode, FcTreeBuilder, build_fc_tree, find_split, format_tree,
    restrict_tree)
