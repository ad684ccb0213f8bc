# physics/entanglement/__init__.py

from physics.entanglement.analytic import (  # noqa: F401
    NOT_GATE_TAU,
    analytic_average,
    model_order,
    not_gate_scaling,
    perturbative_eigenvalues,
    raman_X_constant,
    scaling_leading_term,
    scaling_scan,
)
from physics.entanglement.curves import (  # noqa: F401
    average_entanglement,
    average_entanglement_curve,
    entanglement_vs_time,
    node_entropies,
    tau_to_t_tilde,
)
from physics.entanglement.reduction import entropy_of, qubit_entropies, reduce_to_qubit  # noqa: F401
