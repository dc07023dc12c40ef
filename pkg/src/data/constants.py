from src.groups.descriptors import PolyhedralKind

# Largest n answered from the catalog rather than the theorems.
CATALOG_ONLY_MAX_N = 6

# Smallest n for the polyhedral residue conditions.
POLYHEDRAL_MIN_N = 4

# kind -> (modulus, admissible residues of n)
POLYHEDRAL_RESIDUES = {
    PolyhedralKind.A4: (12, (0, 1, 4, 5, 8)),
    PolyhedralKind.S4: (24, (0, 4, 8, 12, 20)),
    PolyhedralKind.A5: (60, (0, 1, 5, 20)),
}

# Residues of n modulo an odd m >= 3 that admit Z_m and D_m.
ODD_CYCLIC_RESIDUES = (0, 1, 2, 3)

# Residues of n modulo 4 that admit D_2.
KLEIN_RESIDUES = (0, 1, 2)

TABLE_COLUMNS = ["n", "polyhedral", "cyclic_dihedral", "zxz_family", "product_dihedral"]

MARKDOWN_HEADERS = ["Graph",
                    "Polyhedral Groups",
                    "Z_m and D_m",
                    "Z_r x Z_s and (Z_r x Z_s):Z2",
                    "Z_r x D_s and D_r x D_s"]

EMPTY_CELL = "None"
