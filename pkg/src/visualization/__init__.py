from src.visualization.tables import TableFormat, emit_table
