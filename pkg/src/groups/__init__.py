from src.groups.descriptors import (TRIVIAL, Family, GroupDescriptor,
                                    GroupList, PolyhedralKind, canonicalize,
                                    group_order, in_dmdm_universe,
                                    is_canonical)
from src.groups.naming import display_name, parse_group, pretty_name
