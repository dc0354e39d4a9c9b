#include "ryser/data.hpp"

namespace ryser {

namespace {

const int kParker[10][10] = {
    {5, 1, 7, 3, 4, 0, 6, 2, 8, 9},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 0},
    {7, 3, 4, 5, 6, 2, 8, 9, 0, 1},
    {3, 4, 5, 6, 7, 8, 9, 0, 1, 2},
    {4, 5, 6, 7, 8, 9, 0, 1, 2, 3},
    {0, 6, 2, 8, 9, 5, 1, 7, 3, 4},
    {6, 7, 8, 9, 0, 1, 2, 3, 4, 5},
    {2, 8, 9, 0, 1, 7, 3, 4, 5, 6},
    {8, 9, 0, 1, 2, 3, 4, 5, 6, 7},
    {9, 0, 1, 2, 3, 4, 5, 6, 7, 8},
};

// the boxed cells of the display
const int kMarked[12][2] = {{0, 0}, {0, 2}, {0, 5}, {0, 7}, {2, 0}, {2, 5},
                            {5, 0}, {5, 2}, {5, 5}, {5, 7}, {7, 0}, {7, 5}};

SymbolMap digit_symbols(int n) {
    SymbolMap sym;
    for (int i = 0; i < n; ++i) sym.tokens.push_back(std::to_string(i));
    return sym;
}

LatinSquare square_from(const int (*rows)[10]) {
    std::vector<std::vector<int>> e(10, std::vector<int>(10));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) e[i][j] = rows[i][j];
    return LatinSquare(std::move(e), digit_symbols(10));
}

ExactMatrix scaled(std::initializer_list<std::initializer_list<int>> rows, int den) {
    ExactMatrix m((int)rows.size(), (int)rows.begin()->size());
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.at(i, j++) = frac(v, den);
        ++i;
    }
    return m;
}

}  // namespace

LatinSquare parker_square() { return square_from(kParker); }

LatinSquare parker_swapped_square() {
    int e[10][10];
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) e[i][j] = kParker[i][j];
    for (const auto& cell : kMarked) {
        int& v = e[cell[0]][cell[1]];
        v = (v == 0) ? 5 : (v == 5) ? 0 : (v == 2) ? 7 : 2;
    }
    return square_from(e);
}

LatinSquare circulant3() {
    return LatinSquare({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, digit_symbols(3));
}

LatinSquare circulant3_mate() {
    return LatinSquare({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}, digit_symbols(3));
}

LatinSquare cyclic_square(int n) {
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i][j] = (i + j) % n;
    return LatinSquare(std::move(e), digit_symbols(n));
}

ZeroOneMatrix matching_example() {
    return ZeroOneMatrix::parse("1011\n0100\n1000\n1000\n");
}

ZeroOneMatrix forbidden_pattern() {
    return ZeroOneMatrix::parse("011\n101\n110\n");
}

ExactMatrix jurkat_a() {
    return scaled({{11, 5, 8}, {13, 11, 0}, {0, 8, 16}}, 24);
}

ExactMatrix jurkat_b() {
    return scaled({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}, 2);
}

ExactMatrix newman_a() {
    return scaled({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}, 2);
}

}  // namespace ryser
