// Walks the Gray sequence of a small instance and prints each object with
// the element that moved.

#include <mscomb/mscomb.hpp>

#include <iostream>

int main() {
  const mscomb::MultisetSpec spec{{1, 2, 2, 1, 1}, 4};
  mscomb::InPlaceGrayGenerator gen(spec);
  std::cout << gen.engine().current_vector() << "   [" << mscomb::InPlaceForm{gen.container().container()} << "]\n";
  while (auto mv = gen.advance()) {
    std::cout << gen.engine().current_vector() << "   [" << mscomb::InPlaceForm{gen.container().container()}
              << "]   slot " << mv->position << ": " << mv->source << " -> " << mv->dest << '\n';
  }
}
