from src.classification.clauses import (ClassificationResult, ClauseRef,
                                        Theorem)
from src.classification.enumeration import (candidate_groups, classify,
                                            enumerate_groups,
                                            realizing_vertex_counts,
                                            search_space)
from src.classification.theorems import (check, check_cyclic_dihedral,
                                         check_polyhedral,
                                         check_product_dihedral, check_zxz)
