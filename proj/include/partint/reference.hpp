#ifndef PARTINT_REFERENCE_HPP
#define PARTINT_REFERENCE_HPP

// Published lists of general schemes in P^3 and P^4, contained in unions of
// double points, that fail to impose independent conditions on quadrics.

#include <vector>

namespace partint {

struct QuadricTableRow
{
    std::vector<int> lengths; // non-increasing
    int degree = 0;
    int max_delta = 0;
    std::vector<int> m; // type (m_1, ..., m_{n+1})
    int dim = 0;        // dim I_X(2)
};

// n = 3 (7 rows) or n = 4 (36 rows); throws std::invalid_argument otherwise.
const std::vector<QuadricTableRow>& quadric_reference_table(int n);

} // namespace partint

#endif
