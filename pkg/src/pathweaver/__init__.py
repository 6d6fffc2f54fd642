"""Plan concept-level learning paths over a prerequisite graph and score them against a reference."""
from .cost_model import CostParams, CostTable, build_cost_table
from .graph_store import ConceptGraph, GraphError, StudentState, load_graph, load_graph_file
from .kernels import BACKEND
from .pathsim import SimWeights, plan_similarity
from .planner import ConceptPath, LearningPlan, PlannerConfig, plan
from .retrieval import RetrievalConfig, retrieve

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CostParams", "CostTable", "build_cost_table", "ConceptGraph", "GraphError",
    "StudentState", "load_graph", "load_graph_file", "SimWeights", "plan_similarity",
    "ConceptPath", "LearningPlan", "PlannerConfig", "plan", "RetrievalConfig", "retrieve",
]
