"""
Maximal path counts next to the upper bound.

Small cells are scanned exhaustively; 5 x 5 only gets a random search.
"""
import time

from tropcyclic import emit_table, max_ntrop

t0 = time.perf_counter()
table = emit_table(range(1, 5), range(3, 6))
print(table.grid())
print(f"{time.perf_counter() - t0:.1f}s")

res = max_ntrop(4, 5, witnesses=4)
for w in res.witnesses:
    print(w.to_string(" "), "->", res.max_count)

guess = max_ntrop(5, 5, mode="random", budget=40_000, seed=7)
print("5 x 5 lower bound:", guess.max_count)
print(guess.witnesses[0].to_string())
