"""Mapping degrees between spherical 3-manifolds.

Builds the fundamental groups of spherical 3-manifolds as finite matrix
subgroups of SO(4), identifies their cyclic subgroups as lens spaces,
computes deg-bar of arbitrary homomorphisms, and assembles the full
mapping degree sets D(M, N).
"""

from .errors import (AngleNotCommensurate, CapExceeded, ClosureMismatch,
                     ConstraintViolated, Inconsistent, InconsistentSystem,
                     NoFactorization, NotCyclic, NotNormal, ParseError,
                     RelationViolated, SpecInvalid, SphmapError, Underdetermined,
                     UnknownTable, UnregisteredFamily)
from .specs import Family, GroupSpec, ManifoldSpec, parse_group, parse_manifold
from .groups import (CayleyGroup, ConjugacyClass, Group, SubgroupRecord,
                     build_group, characteristic_subgroups, classify,
                     classify_subgroup, cyclic_generator, find_embedding,
                     find_isomorphism, maximal_cyclic_subgroups, subcayley,
                     subgroups)
from .lens import (DegreeSet, LensSpace, canonical_lens, homeomorphic,
                   inverse_mod, lens_degree_set, lens_hom_degree, lens_of_cyclic,
                   oriented_homeomorphic, rotation_angles)
from .homs import (Homomorphism, OuterClass, automorphism_group, compose,
                   conjugate_homs, enumerate_homs, identity_hom, is_inner,
                   make_hom, outer_classes)
from .degrees import (CongruenceSystem, Factorization, SurjectionRow,
                      congruences_for, deg_aut, deg_hom, deg_surjection,
                      find_standard_factorization, mapping_degree_set,
                      product_degree, surjection_rows)
from .oracle import VerificationReport, brute_degree_set, registered_tables, verify_table

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
