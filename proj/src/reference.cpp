#include "partint/reference.hpp"

#include <stdexcept>

namespace partint {

namespace {

std::vector<int> type_of(int n, const std::vector<int>& lengths)
{
    std::vector<int> m(n + 1, 0);
    for (int l : lengths)
        ++m[l - 1];
    return m;
}

QuadricTableRow row(int n, std::vector<int> lengths, int degree, int max_delta, int dim)
{
    auto m = type_of(n, lengths);
    return {std::move(lengths), degree, max_delta, std::move(m), dim};
}

std::vector<QuadricTableRow> make_p3()
{
    // m-vectors as printed
    return {
        {{4, 4, 4}, 12, 3, {0, 0, 0, 3}, 1},
        {{4, 4, 3}, 11, 2, {0, 0, 1, 2}, 1},
        {{4, 4, 2}, 10, 1, {0, 1, 0, 2}, 1},
        {{4, 4, 1, 1}, 10, 1, {2, 0, 0, 2}, 1},
        {{4, 4, 1}, 9, 1, {1, 0, 0, 2}, 2},
        {{4, 4}, 8, 1, {0, 0, 0, 2}, 3},
        {{4, 3, 3}, 10, 1, {0, 0, 2, 1}, 1},
    };
}

std::vector<QuadricTableRow> make_p4()
{
    const int n = 4;
    return {
        row(n, {5, 5, 5, 5}, 20, 6, 1),
        row(n, {5, 5, 5, 4}, 19, 5, 1),
        row(n, {5, 5, 5, 3}, 18, 4, 1),
        row(n, {5, 5, 5, 2}, 17, 3, 1),
        row(n, {5, 5, 5, 1, 1}, 17, 3, 1),
        row(n, {5, 5, 5, 1}, 16, 3, 2),
        row(n, {5, 5, 5}, 15, 3, 3),
        row(n, {5, 5, 4, 4}, 18, 4, 1),
        row(n, {5, 5, 4, 3}, 17, 3, 1),
        row(n, {5, 5, 4, 2}, 16, 2, 1),
        row(n, {5, 5, 4, 1, 1}, 16, 2, 1),
        row(n, {5, 5, 4, 1}, 15, 2, 2),
        row(n, {5, 5, 4}, 14, 2, 3),
        row(n, {5, 5, 3, 3}, 16, 2, 1),
        row(n, {5, 5, 3, 2}, 15, 1, 1),
        row(n, {5, 5, 3, 1, 1}, 15, 1, 1),
        row(n, {5, 5, 3, 1}, 14, 1, 2),
        row(n, {5, 5, 3}, 13, 1, 3),
        row(n, {5, 5, 2, 2, 1}, 15, 1, 1),
        row(n, {5, 5, 2, 2}, 14, 1, 2),
        row(n, {5, 5, 2, 1, 1, 1}, 15, 1, 1),
        row(n, {5, 5, 2, 1, 1}, 14, 1, 2),
        row(n, {5, 5, 2, 1}, 13, 1, 3),
        row(n, {5, 5, 2}, 12, 1, 4),
        row(n, {5, 5, 1, 1, 1, 1, 1}, 15, 1, 1),
        row(n, {5, 5, 1, 1, 1, 1}, 14, 1, 2),
        row(n, {5, 5, 1, 1, 1}, 13, 1, 3),
        row(n, {5, 5, 1, 1}, 12, 1, 4),
        row(n, {5, 5, 1}, 11, 1, 5),
        row(n, {5, 5}, 10, 1, 6),
        row(n, {5, 4, 4, 2}, 15, 1, 1),
        row(n, {5, 4, 4, 1, 1}, 15, 1, 1),
        row(n, {5, 4, 4, 1}, 14, 1, 2),
        row(n, {5, 4, 4}, 13, 1, 3),
        row(n, {4, 4, 4, 4}, 16, 2, 1),
        row(n, {4, 4, 4, 3}, 15, 1, 1),
    };
}

} // namespace

const std::vector<QuadricTableRow>& quadric_reference_table(int n)
{
    static const auto p3 = make_p3();
    static const auto p4 = make_p4();
    if (n == 3)
        return p3;
    if (n == 4)
        return p4;
    throw std::invalid_argument("reference tables exist for n = 3 and n = 4 only");
}

} // namespace partint
