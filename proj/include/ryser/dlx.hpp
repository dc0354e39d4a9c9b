#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ryser {

// Dancing-links exact cover. Column choice: fewest covering rows, ties
// broken toward the lowest column index, so searches are deterministic.
class ExactCover {
  public:
    explicit ExactCover(int num_cols);

    int add_row(std::span<const int> cols);  // returns the row id

    // first solution in the deterministic search order, as row ids
    std::optional<std::vector<int>> find_one();
    uint64_t count_all();

  private:
    struct Node {
        int up, down, col, row;
    };
    std::vector<Node> nodes_;       // nodes_[0..C-1] are column heads
    std::vector<int> left_, right_; // circular list over column heads + root C
    std::vector<int> count_;
    int num_cols_ = 0, num_rows_ = 0;

    void cover(int c);
    void uncover(int c);
    template <class Visit>
    bool search(Visit&& visit, std::vector<int>& partial);
    uint64_t count_rec();
    std::vector<int> row_start_;    // node index of each row's first node
};

}  // namespace ryser
