# physics/dynamics/__init__.py

from physics.dynamics.envelope import effective_alpha, envelope_times  # noqa: F401
from physics.dynamics.jc import (  # noqa: F401
    init_jc_state,
    jc_block_propagator,
    jc_evolve,
    product_jc_state,
)
from physics.dynamics.leakage import (  # noqa: F401
    LEAKAGE_FAIL_MASS,
    LEAKAGE_WARN_MASS,
    LeakageMonitor,
    check_leakage,
)
from physics.dynamics.raman import (  # noqa: F401
    init_raman_state,
    product_raman_state,
    raman_evolve,
    raman_number_state,
    raman_rates,
)
