#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "abvar/integer.hpp"

namespace abvar {

/*
 * Process-wide memo table for class numbers, keyed by discriminant
 * (negative: imaginary, positive: real). Concurrent readers, serialized
 * writes. Optionally backed by a plain-text file of "D<TAB>h" lines.
 */
class ClassNumberCache {
    mutable std::shared_mutex mutex_;
    std::map<Int, Int> table_;

  public:
    static ClassNumberCache& instance();

    std::optional<Int> lookup(const Int& disc) const;
    void store(const Int& disc, const Int& h);
    std::size_t size() const;
    void clear();

    /* Merges entries from the file; missing file is not an error. */
    void load_file(const std::string& path);
    /* Writes the whole table, one "D<TAB>h" line per discriminant. */
    void save_file(const std::string& path) const;
};

} // namespace abvar
