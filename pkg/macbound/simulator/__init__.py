from .monte_carlo import (run_monte_carlo, create_simulator, chunk_sizes,
                          CHUNK_SIZE)
