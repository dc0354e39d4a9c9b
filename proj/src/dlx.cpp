#include "ryser/dlx.hpp"

#include <algorithm>
#include <stdexcept>

namespace ryser {

ExactCover::ExactCover(int num_cols) : num_cols_(num_cols) {
    if (num_cols <= 0) throw std::invalid_argument("exact cover needs columns");
    nodes_.resize(num_cols);
    for (int c = 0; c < num_cols; ++c) nodes_[c] = {c, c, c, -1};
    left_.resize(num_cols + 1);
    right_.resize(num_cols + 1);
    for (int c = 0; c <= num_cols; ++c) {
        left_[c] = (c + num_cols) % (num_cols + 1);
        right_[c] = (c + 1) % (num_cols + 1);
    }
    count_.assign(num_cols, 0);
    row_start_.push_back((int)nodes_.size());
}

int ExactCover::add_row(std::span<const int> cols) {
    if (cols.empty()) throw std::invalid_argument("empty exact-cover row");
    int row = num_rows_++;
    for (int c : cols) {
        if (c < 0 || c >= num_cols_) throw std::invalid_argument("column out of range");
        int idx = (int)nodes_.size();
        int head = c;
        nodes_.push_back({nodes_[head].up, head, c, row});
        nodes_[nodes_[head].up].down = idx;
        nodes_[head].up = idx;
        ++count_[c];
    }
    row_start_.push_back((int)nodes_.size());
    return row;
}

void ExactCover::cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = nodes_[c].down; i != c; i = nodes_[i].down) {
        int row = nodes_[i].row;
        for (int j = row_start_[row + 1] - 1; j >= row_start_[row]; --j) {
            if (j == i) continue;
            nodes_[nodes_[j].up].down = nodes_[j].down;
            nodes_[nodes_[j].down].up = nodes_[j].up;
            --count_[nodes_[j].col];
        }
    }
}

void ExactCover::uncover(int c) {
    for (int i = nodes_[c].up; i != c; i = nodes_[i].up) {
        int row = nodes_[i].row;
        for (int j = row_start_[row]; j < row_start_[row + 1]; ++j) {
            if (j == i) continue;
            nodes_[nodes_[j].up].down = j;
            nodes_[nodes_[j].down].up = j;
            ++count_[nodes_[j].col];
        }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
}

template <class Visit>
bool ExactCover::search(Visit&& visit, std::vector<int>& partial) {
    if (right_[num_cols_] == num_cols_) return visit(partial);
    int best = -1;
    for (int c = right_[num_cols_]; c != num_cols_; c = right_[c])
        if (best < 0 || count_[c] < count_[best]) best = c;
    if (count_[best] == 0) return false;

    cover(best);
    bool done = false;
    for (int i = nodes_[best].down; i != best && !done; i = nodes_[i].down) {
        int row = nodes_[i].row;
        partial.push_back(row);
        for (int j = row_start_[row]; j < row_start_[row + 1]; ++j)
            if (j != i) cover(nodes_[j].col);
        done = search(visit, partial);
        for (int j = row_start_[row + 1] - 1; j >= row_start_[row]; --j)
            if (j != i) uncover(nodes_[j].col);
        partial.pop_back();
    }
    uncover(best);
    return done;
}

std::optional<std::vector<int>> ExactCover::find_one() {
    std::vector<int> partial, solution;
    bool found = search(
        [&](const std::vector<int>& rows) {
            solution = rows;
            return true;
        },
        partial);
    if (!found) return std::nullopt;
    std::sort(solution.begin(), solution.end());
    return solution;
}

uint64_t ExactCover::count_all() {
    uint64_t total = 0;
    std::vector<int> partial;
    search(
        [&](const std::vector<int>&) {
            ++total;
            return false;  // keep searching
        },
        partial);
    return total;
}

}  // namespace ryser
