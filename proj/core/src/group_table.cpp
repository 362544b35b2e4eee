#include "symkron/group_table.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "symkron/bigint.hpp"
#include "symkron/errors.hpp"

namespace symkron {

GroupTable::GroupTable(int n) : n_(n), size_(0), classes_(n) {
  if (n > kMaxGroupTableDegree) {
    throw ResourceError("GroupTable: n exceeds ceiling " +
                        std::to_string(kMaxGroupTableDegree));
  }
  size_ = static_cast<int>(factorial(n).get_ui());

  elements_.reserve(static_cast<size_t>(size_));
  for (int r = 0; r < size_; ++r) {
    elements_.push_back(perm_unindex(static_cast<std::uint64_t>(r), n));
  }

  compose_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
  inverse_.resize(static_cast<size_t>(size_));
  class_index_.resize(static_cast<size_t>(size_));
  class_members_.resize(static_cast<size_t>(classes_.size()));
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      compose_[static_cast<size_t>(a) * static_cast<size_t>(size_) +
               static_cast<size_t>(b)] =
          static_cast<int>(perm_index(symkron::compose(elements_[
              static_cast<size_t>(a)], elements_[static_cast<size_t>(b)])));
    }
    inverse_[static_cast<size_t>(a)] =
        static_cast<int>(perm_index(symkron::inverse(elements_[
            static_cast<size_t>(a)])));
    const int c = classes_.index_of(cycle_type(elements_[static_cast<size_t>(a)]));
    class_index_[static_cast<size_t>(a)] = c;
    class_members_[static_cast<size_t>(c)].push_back(a);
  }
}

const GroupTable& group_table_cached(int n) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GroupTable>(n);
  return *slot;
}

}  // namespace symkron
