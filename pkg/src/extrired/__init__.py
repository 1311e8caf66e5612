"""Reductions of rigid subcategories in finite extriangulated categories built
from Nakayama algebras: exact E^k tables, orthogonals, reductions and
cluster-tilting enumeration."""

__version__ = "0.1.0"

from .algebra import FieldSpec, IndecObject, M, QuiverPresentation, Shape  # noqa: E402
from .extri import ExtriCategory, build_extension_closed_sub, build_module_cat, build_stable_cat  # noqa: E402
from .subcat import Subcat, left_orth, right_orth, is_b_rigid  # noqa: E402
from .reduction import ReductionReport, reduce, collapse_check  # noqa: E402
from .cluster import (ClusterSearchConfig, enumerate_cluster_tilting, is_cluster_tilting,  # noqa: E402
                      verify_correspondence)
from .instance import InstanceSpec, build_category, load, parse, emit  # noqa: E402

__all__ = [
    "FieldSpec", "IndecObject", "M", "QuiverPresentation", "Shape",
    "ExtriCategory", "build_extension_closed_sub", "build_module_cat", "build_stable_cat",
    "Subcat", "left_orth", "right_orth", "is_b_rigid",
    "ReductionReport", "reduce", "collapse_check",
    "ClusterSearchConfig", "enumerate_cluster_tilting", "is_cluster_tilting", "verify_correspondence",
    "InstanceSpec", "build_category", "load", "parse", "emit",
]
