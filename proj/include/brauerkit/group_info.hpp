#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "brauerkit/group.hpp"
#include "brauerkit/lattice.hpp"
#include "brauerkit/marks.hpp"

namespace brauerkit {

/// A group together with its subgroup lattice and table of marks. Immutable
/// once built; shared between every computation that touches the group.
struct GroupInfo {
    FiniteGroup group;
    SubgroupLattice lattice;
    TableOfMarks marks;
    std::string key;

    std::size_t class_count() const noexcept { return lattice.size(); }
    std::size_t top_class() const noexcept { return lattice.top(); }
    std::size_t order() const noexcept { return group.order(); }
};

using GroupRef = std::shared_ptr<const GroupInfo>;

inline bool same_group(const GroupInfo& a, const GroupInfo& b) {
    return &a == &b || (a.key == b.key && a.group.elements() == b.group.elements());
}

/// Content hash of the canonical element list: 64-bit FNV-1a over degree and
/// images, rendered as 16 hex digits.
inline std::string content_key(const FiniteGroup& G) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(G.degree());
    mix(G.order());
    for (const auto& p : G.elements())
        for (Point x : p.images()) mix(x);
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline constexpr int cache_format_version = 1;

namespace detail {

inline nlohmann::json serialize_info(const GroupInfo& info) {
    nlohmann::json j;
    j["version"] = cache_format_version;
    j["key"] = info.key;
    j["degree"] = info.group.degree();
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& p : info.group.elements())
        elems.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
    j["elements"] = std::move(elems);
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : info.lattice.classes()) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& m : c.members) members.push_back(m.members.indices());
        classes.push_back({{"normalizer_order", c.normalizer_order}, {"members", std::move(members)}});
    }
    j["classes"] = std::move(classes);
    nlohmann::json marks = nlohmann::json::array();
    for (std::size_t i = 0; i < info.marks.size(); ++i) {
        std::vector<long> row;
        for (std::size_t k = 0; k < info.marks.size(); ++k) row.push_back(info.marks(i, k).get_si());
        marks.push_back(row);
    }
    j["marks"] = std::move(marks);
    return j;
}

inline std::optional<GroupInfo> deserialize_info(const nlohmann::json& j, const FiniteGroup& G,
                                                 const std::string& key) {
    if (j.value("version", -1) != cache_format_version || j.value("key", "") != key) return std::nullopt;
    if (j.at("degree").get<std::size_t>() != G.degree()) return std::nullopt;
    const auto& elems = j.at("elements");
    if (elems.size() != G.order()) return std::nullopt;
    for (std::size_t i = 0; i < G.order(); ++i) {
        auto im = elems[i].get<std::vector<Point>>();
        if (!std::equal(im.begin(), im.end(), G.element(Index(i)).images().begin(),
                        G.element(Index(i)).images().end()))
            return std::nullopt;
    }
    std::vector<SubgroupClass> classes;
    for (const auto& c : j.at("classes")) {
        SubgroupClass cls;
        cls.normalizer_order = c.at("normalizer_order").get<std::size_t>();
        for (const auto& m : c.at("members")) {
            auto idx = m.get<std::vector<Index>>();
            cls.members.push_back(Subgroup{ElementSet::from_indices(G.order(), idx)});
        }
        cls.representative = cls.members.front();
        classes.push_back(std::move(cls));
    }
    GroupInfo info{G, SubgroupLattice(std::move(classes)), {}, key};
    const auto& mk = j.at("marks");
    info.marks.marks = IntMatrix(mk.size(), mk.size());
    for (std::size_t r = 0; r < mk.size(); ++r)
        for (std::size_t c = 0; c < mk.size(); ++c) info.marks.marks(r, c) = mk[r][c].get<long>();
    return info;
}

} // namespace detail

/// Process-wide memo of analyzed groups, optionally backed by a directory of
/// versioned, content-addressed cache files (one JSON file per group).
class Registry {
public:
    static Registry& instance() {
        static Registry r;
        return r;
    }

    void set_cache_dir(std::optional<std::filesystem::path> dir) {
        std::lock_guard lk(mu_);
        cache_dir_ = std::move(dir);
    }

    std::optional<std::filesystem::path> cache_dir() const {
        std::lock_guard lk(mu_);
        return cache_dir_;
    }

    void set_lattice_cap(std::size_t cap) {
        std::lock_guard lk(mu_);
        lattice_cap_ = cap;
    }

    void clear() {
        std::lock_guard lk(mu_);
        memo_.clear();
    }

    GroupRef analyze(const FiniteGroup& G) {
        const std::string key = content_key(G);
        std::optional<std::filesystem::path> dir;
        std::size_t cap;
        {
            std::lock_guard lk(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end() && it->second->group.elements() == G.elements()) return it->second;
            dir = cache_dir_;
            cap = lattice_cap_;
        }
        std::shared_ptr<GroupInfo> info;
        if (dir) {
            if (auto loaded = load(*dir, G, key)) info = std::make_shared<GroupInfo>(std::move(*loaded));
        }
        if (!info) {
            auto lattice = all_subgroups(G, cap);
            auto marks = table_of_marks(G, lattice);
            info = std::make_shared<GroupInfo>(GroupInfo{G, std::move(lattice), std::move(marks), key});
            if (dir) store(*dir, *info);
        }
        std::lock_guard lk(mu_);
        auto [it, inserted] = memo_.emplace(key, info);
        if (!inserted && it->second->group.elements() != G.elements()) return info;  // hash collision
        return it->second;
    }

private:
    Registry() = default;

    static std::optional<GroupInfo> load(const std::filesystem::path& dir, const FiniteGroup& G,
                                         const std::string& key) {
        std::ifstream in(dir / (key + ".json"));
        if (!in) return std::nullopt;
        try {
            auto j = nlohmann::json::parse(in);
            return detail::deserialize_info(j, G, key);
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;
        }
    }

    static void store(const std::filesystem::path& dir, const GroupInfo& info) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw Error(Errc::CacheError, "cannot create cache directory " + dir.string());
        const auto final_path = dir / (info.key + ".json");
        auto tmp = final_path;
        tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        {
            std::ofstream out(tmp);
            if (!out) throw Error(Errc::CacheError, "cannot write " + tmp.string());
            out << detail::serialize_info(info).dump();
        }
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) throw Error(Errc::CacheError, "cannot move cache file into place");
    }

    mutable std::mutex mu_;
    std::optional<std::filesystem::path> cache_dir_;
    std::size_t lattice_cap_ = default_lattice_cap;
    std::unordered_map<std::string, GroupRef> memo_;
};

inline GroupRef analyze(const FiniteGroup& G) { return Registry::instance().analyze(G); }

/// Subgroup H of an analyzed group, analyzed as a group in its own right.
/// H's element indices are a monotone subsequence of G's.
struct Embedding {
    GroupRef parent;
    GroupRef sub;
    std::vector<Index> to_parent;
    std::vector<Index> from_parent;  // npos where the parent element is outside H

    static constexpr Index npos = ~Index{0};

    ElementSet to_parent_set(const ElementSet& s) const {
        ElementSet out(parent->order());
        for (Index i : s.indices()) out.insert(to_parent[i]);
        return out;
    }

    /// The part of a parent subset lying inside H, in H's indexing.
    ElementSet from_parent_set(const ElementSet& s) const {
        ElementSet out(sub->order());
        for (Index i : s.indices())
            if (from_parent[i] != npos) out.insert(from_parent[i]);
        return out;
    }
};

inline Embedding embed(const GroupRef& G, const Subgroup& H) {
    if (H.members.universe() != G->order() || !is_subgroup(G->group, H.members))
        throw Error(Errc::NotSubgroup, "mask is not a subgroup of the parent group");
    Embedding e;
    e.parent = G;
    e.sub = analyze(subgroup_as_group(G->group, H));
    e.to_parent = H.members.indices();
    e.from_parent.assign(G->order(), Embedding::npos);
    for (Index i = 0; i < e.to_parent.size(); ++i) e.from_parent[e.to_parent[i]] = i;
    return e;
}

} // namespace brauerkit
