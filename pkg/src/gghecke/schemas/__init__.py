"""Report and input records shared by the services and the CLI."""

from .character import CharacterSpec
from .relation_report import RelationCheck, RelationReport
from .solution_family import SolutionFamily
from .solver_report import SolutionEntry, SolverReport, VariantEvidence
from .one_dim_rep import InducedModuleDescriptor, OneDimRep
from .classification_report import ClassificationReport
from .gg_input import GGInput
from .gg_report import CaseIIAnnotation, GGReport

__all__ = [
    "CharacterSpec",
    "RelationCheck",
    "RelationReport",
    "SolutionFamily",
    "SolutionEntry",
    "SolverReport",
    "VariantEvidence",
    "OneDimRep",
    "InducedModuleDescriptor",
    "ClassificationReport",
    "GGInput",
    "GGReport",
    "CaseIIAnnotation",
]
