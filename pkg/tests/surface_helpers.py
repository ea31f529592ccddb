from milnor.alternating import triples
from milnor.surface import ClaspWord, SurfaceSystemData, base_surface_system

from conftest import random_linking_matrix


def random_surface_system(rng, n, max_len=12, lk_range=1):
    """Consistent clasp-word data: shuffled base words plus cancelling pairs."""
    lam = random_linking_matrix(rng, n, -lk_range, lk_range)
    words = []
    for w in base_surface_system(lam).words:
        letters = list(w.letters)
        while len(letters) + 2 <= max_len and rng.random() < 0.7:
            j = rng.choice([x for x in range(1, n + 1) if x != len(words) + 1])
            letters += [(j, 1), (j, -1)]
        rng.shuffle(letters)
        words.append(ClaspWord(tuple(letters)))
    tp = {t: rng.randint(-3, 3) for t in triples(n) if rng.random() < 0.5}
    return lam, SurfaceSystemData(n, tuple(words), tp)
