"""Operation counts of the S_n solver against degree and word length."""

from scpp.bench import fit_slope, format_table, scaling_in_k, scaling_in_n

rows = scaling_in_n([8, 16, 32, 64, 128, 256])
print(format_table(rows, fit_slope([r.n for r in rows], [r.ops for r in rows])))

rows = scaling_in_k([100, 1000, 10_000], n=16)
print(format_table(rows, fit_slope([r.length for r in rows], [r.ops for r in rows])))
