"""Enhanced power graphs of finite groups.

Build groups, their power / enhanced power / difference / prime graphs, and
colour the enhanced power graph with exactly max-element-order colours.
"""

from .colouring import colour_group, validate_certificate, verify_weak_perfectness
from .divisors import (alpha_bruteforce, alpha_de_bruijn, delta_clique_number,
                       lcm_checked, primes_in_half_interval, totient)
from .errors import CapExceeded, DescriptorError, InvalidGroupError
from .farey import (ColourFamily, build_colour_families, ceil_map, farey_fractions,
                    verify_colour_families, verify_key_observation)
from .graphs import (Colouring, SimpleGraph, chromatic_number_exact, clique_number_exact,
                     is_bipartite, is_proper_colouring)
from .groups import CyclicSubgroup, FiniteGroup, construct_group
from .powergraphs import (GkGraph, build_gk_graph, build_graph, delta_adjacent,
                          enhanced_adjacent, gk_component_count, isolated_large_primes,
                          power_adjacent)

__version__ = "0.1.0"
