"""
Reductions API client: turns extension queries into Independent Family instances,
weft-3 circuits and antimonotone formulas.
"""

import logging
from typing import TYPE_CHECKING

from ..core.circuits import check_weft3, circuit_to_formula, if_to_circuit
from ..core.extension import reduce_to_mcif
from ..core.families import mcif_to_if
from ..formats.instances import dump_circuit, dump_if, dump_mcif
from ..models.circuits import Antimonotone3NFormula, Weft3Circuit
from ..models.extension import WitnessMode
from ..models.families import EmitKind, MultiColouredInstance, SingleColouredInstance

if TYPE_CHECKING:
    from ..session import HypergraphSession, SetLike

logger = logging.getLogger(__name__)


def _mode(punctured: bool) -> WitnessMode:
    return WitnessMode.PUNCTURED if punctured else WitnessMode.UNPUNCTURED


class ReductionsAPI:
    """Client composing the reduction chain extension -> mcif -> if -> circuit -> formula."""

    def __init__(self, session: "HypergraphSession"):
        self._session = session

    def to_mcif(
        self, include: "SetLike", exclude: "SetLike" = None, punctured: bool = False
    ) -> MultiColouredInstance:
        """
        Reduce the extension query to a Multicoloured Independent Family instance.

        Raises:
            LexHitUsageError: If the query is invalid
        """
        q = self._session.extension.query(include, exclude)
        return reduce_to_mcif(q, _mode(punctured))

    def to_if(
        self, include: "SetLike", exclude: "SetLike" = None, punctured: bool = False
    ) -> SingleColouredInstance:
        return mcif_to_if(self.to_mcif(include, exclude, punctured))

    def to_circuit(
        self, include: "SetLike", exclude: "SetLike" = None, punctured: bool = False
    ) -> Weft3Circuit:
        """
        Reduce to a weft-3 circuit, checking its layer structure when
        ``settings.check_bounds`` is on.

        Raises:
            BoundViolationError: If the emitted circuit is not weft 3
        """
        circuit = if_to_circuit(self.to_if(include, exclude, punctured))
        if self._session.settings.check_bounds:
            check_weft3(circuit)
        return circuit

    def to_formula(
        self, include: "SetLike", exclude: "SetLike" = None, punctured: bool = False
    ) -> Antimonotone3NFormula:
        return circuit_to_formula(self.to_circuit(include, exclude, punctured))

    def emit(
        self,
        kind: EmitKind,
        include: "SetLike",
        exclude: "SetLike" = None,
        punctured: bool = False,
    ) -> str:
        """Render the requested reduction artifact in its text format."""
        kind = EmitKind(kind)
        logger.info("emitting %s reduction", kind.value)
        if kind == EmitKind.MCIF:
            return dump_mcif(self.to_mcif(include, exclude, punctured))
        if kind == EmitKind.IF:
            return dump_if(self.to_if(include, exclude, punctured))
        if kind == EmitKind.CIRCUIT:
            return dump_circuit(self.to_circuit(include, exclude, punctured))
        return self.to_formula(include, exclude, punctured).render() + "\n"
