from .eta_spec import EtaSpec
from .processes import IncreasingProcess, JumpPoint, ThetaAtom
from .cadlag_path import CadlagPath
from .levy_config import JumpAtom, JumpComponent, LevyConfig
from .quadruple_config import QuadrupleConfig
from .bound_result import BoundResult, PExponents
from .mc_report import McEstimate, McReport, decide_verdict
from .run_config import RunConfig, VerifyConfig
from .model_spec import ModelSpec

__all__ = [
    "EtaSpec",
    "IncreasingProcess",
    "JumpPoint",
    "ThetaAtom",
    "CadlagPath",
    "JumpAtom",
    "JumpComponent",
    "LevyConfig",
    "QuadrupleConfig",
    "BoundResult",
    "PExponents",
    "McEstimate",
    "McReport",
    "decide_verdict",
    "RunConfig",
    "VerifyConfig",
    "ModelSpec",
]
