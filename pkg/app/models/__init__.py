from .group_models import OMEGA, AbelianGroup, Cardinal, GroupKind, Infinity, PrimePower, RelationPresentation, SNFResult
from .space_models import (EM, CapacityKind, CapacityResult, Moore, NormalForm, NormalFormKind, Point, Product,
                           PseudoProjective, SpaceExpr, Sphere, Suspension, Torus, UnknownReason, Wedge)
from .summand_models import EndoMatrix, IdempotentReport, SummandCount, VerifyRecord, WitnessFamily
from .envelope_models import ErrorInfo, OutputEnvelope
