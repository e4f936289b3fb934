#include "abvar/cache.hpp"

#include <fstream>
#include <mutex>

namespace abvar {

ClassNumberCache& ClassNumberCache::instance()
{
    static ClassNumberCache cache;
    return cache;
}

std::optional<Int> ClassNumberCache::lookup(const Int& disc) const
{
    std::shared_lock lock(mutex_);
    auto it = table_.find(disc);
    if (it == table_.end())
        return std::nullopt;
    return it->second;
}

void ClassNumberCache::store(const Int& disc, const Int& h)
{
    std::unique_lock lock(mutex_);
    table_.insert_or_assign(disc, h);
}

std::size_t ClassNumberCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

void ClassNumberCache::clear()
{
    std::unique_lock lock(mutex_);
    table_.clear();
}

void ClassNumberCache::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        return;
    std::string disc_str, h_str;
    std::unique_lock lock(mutex_);
    while (in >> disc_str >> h_str) {
        try {
            table_.insert_or_assign(Int(disc_str), Int(h_str));
        } catch (const std::invalid_argument&) {
            throw domain_error("cache file " + path + ": bad line '" + disc_str + "\t" + h_str + "'");
        }
    }
}

void ClassNumberCache::save_file(const std::string& path) const
{
    std::ofstream out(path);
    if (!out)
        throw domain_error("cache file " + path + ": cannot open for writing");
    std::shared_lock lock(mutex_);
    for (const auto& [disc, h] : table_)
        out << disc.get_str() << '\t' << h.get_str() << '\n';
}

} // namespace abvar
