from src.automorphisms.cycle_types import (AutomorphismVerdict, CycleType,
                                           cycle_type_of, is_realizable,
                                           realizable_cycle_types)
