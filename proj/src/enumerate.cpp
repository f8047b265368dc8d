#include "secfan/enumerate.hpp"

#include "secfan/json_io.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

namespace secfan {

Integer OrbitCatalog::total() const
{
    Integer t = 0;
    for (const auto& s : orbit_sizes)
        t += s;
    return t;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < threads; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                }
                catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& w : workers)
        w.join();
    if (error)
        std::rethrow_exception(error);
}

namespace {

struct EnumerationState
{
    std::set<Subdivision> regular;
    std::set<Subdivision> nonregular;
    std::vector<Subdivision> frontier;
    std::size_t levels = 0;
};

Json checkpoint_header(const PointConfiguration& config, const PointGroup& group)
{
    return {{"format", "secfan-enumeration-checkpoint"},
            {"configuration", configuration_json(config)},
            {"group_order", group.order()}};
}

Json level_line(std::size_t level, const std::vector<Subdivision>& regular, const std::vector<Subdivision>& nonregular)
{
    Json reg = Json::array();
    for (const auto& s : regular)
        reg.push_back(cells_json(s));
    Json non = Json::array();
    for (const auto& s : nonregular)
        non.push_back(cells_json(s));
    return {{"level", level}, {"regular", reg}, {"nonregular", non}};
}

EnumerationState load_checkpoint(const std::string& path, const Json& expected_header)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open checkpoint " + path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty())
            lines.push_back(line);
    if (lines.empty())
        throw InvalidInput("checkpoint " + path + " is empty");
    EnumerationState state;
    try {
        Json header = Json::parse(lines[0]);
        if (header != expected_header)
            throw InvalidInput("checkpoint " + path + " was written for a different configuration or group");
        for (std::size_t l = 1; l < lines.size(); ++l) {
            Json j;
            try {
                j = Json::parse(lines[l]);
            }
            catch (const Json::parse_error&) {
                if (l + 1 == lines.size())
                    break;  // torn final line from an interrupted write
                throw;
            }
            if (j.at("level").get<std::size_t>() != l - 1)
                throw InvalidInput("checkpoint levels are out of sequence");
            state.frontier.clear();
            for (const auto& s : j.at("regular")) {
                Subdivision t = subdivision_from_json(s);
                state.regular.insert(t);
                state.frontier.push_back(std::move(t));
            }
            for (const auto& s : j.at("nonregular"))
                state.nonregular.insert(subdivision_from_json(s));
            state.levels = l;
        }
    }
    catch (const Json::exception& e) {
        throw InvalidInput("corrupt checkpoint " + path + ": " + e.what());
    }
    if (state.levels == 0)
        throw InvalidInput("checkpoint " + path + " holds no levels");
    return state;
}

}  // namespace

EnumerationResult enumerate_regular_triangulations(const PointConfiguration& config, const PointGroup& group,
                                                   const EnumerationOptions& options)
{
    if (group.degree() != config.size())
        throw InvalidInput("group degree does not match the number of points");
    const Json header = checkpoint_header(config, group);
    EnumerationState state;
    std::ofstream out;

    if (options.resume) {
        if (options.checkpoint.empty())
            throw InvalidInput("resume requested without a checkpoint file");
        state = load_checkpoint(options.checkpoint, header);
        out.open(options.checkpoint, std::ios::app);
    }
    else {
        Subdivision seed = group.canonical(seed_triangulation(config, options.seed));
        if (!is_regular_triangulation(config, seed))
            throw InvariantViolation("seed triangulation is not regular");
        state.regular.insert(seed);
        state.frontier = {seed};
        state.levels = 1;
        if (!options.checkpoint.empty()) {
            out.open(options.checkpoint, std::ios::trunc);
            out << header.dump() << '\n' << level_line(0, state.frontier, {}).dump() << '\n';
            out.flush();
        }
    }
    if (!options.checkpoint.empty() && !out)
        throw InvalidInput("cannot write checkpoint " + options.checkpoint);

    std::size_t expanded = 0;
    while (!state.frontier.empty()) {
        if (options.max_levels != 0 && expanded == options.max_levels)
            break;
        // neighbours of every frontier element, in canonical form
        std::vector<std::vector<Subdivision>> neighbours(state.frontier.size());
        parallel_for(state.frontier.size(), options.threads, [&](std::size_t i) {
            for (const auto& f : flips(config, state.frontier[i]))
                neighbours[i].push_back(group.canonical(f));
        });
        std::set<Subdivision> fresh;
        for (const auto& list : neighbours)
            for (const auto& s : list)
                if (!state.regular.count(s) && !state.nonregular.count(s))
                    fresh.insert(s);
        std::vector<Subdivision> candidates(fresh.begin(), fresh.end());
        std::vector<char> regular(candidates.size(), 0);
        parallel_for(candidates.size(), options.threads,
                     [&](std::size_t i) { regular[i] = is_regular_triangulation(config, candidates[i]) ? 1 : 0; });

        std::vector<Subdivision> next;
        std::vector<Subdivision> rejected;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (regular[i]) {
                state.regular.insert(candidates[i]);
                next.push_back(std::move(candidates[i]));
            }
            else {
                state.nonregular.insert(candidates[i]);
                rejected.push_back(std::move(candidates[i]));
            }
        }
        if (out.is_open()) {
            out << level_line(state.levels, next, rejected).dump() << '\n';
            out.flush();
        }
        state.frontier = std::move(next);
        ++state.levels;
        ++expanded;
        if (options.progress)
            options.progress(state.levels, state.regular.size(), state.frontier.size());
        if (options.max_orbits != 0 && state.regular.size() > options.max_orbits)
            throw ResourceLimit("enumeration exceeded " + std::to_string(options.max_orbits) + " orbits");
    }

    EnumerationResult result;
    result.complete = state.frontier.empty();
    result.levels = state.levels;
    auto& cat = result.catalog;
    cat.representatives.assign(state.regular.begin(), state.regular.end());
    cat.orbit_sizes.resize(cat.representatives.size());
    cat.heights.resize(cat.representatives.size());
    parallel_for(cat.representatives.size(), options.threads, [&](std::size_t i) {
        cat.orbit_sizes[i] = group.orbit_size(cat.representatives[i]);
        auto w = regular_heights(config, cat.representatives[i]);
        if (!w)
            throw InvariantViolation("catalog entry lost its regularity");
        cat.heights[i] = std::move(*w);
    });
    for (const auto& r : cat.representatives)
        ++cat.spread_histogram[r.spread()];
    cat.nonregular_neighbours = state.nonregular.size();
    return result;
}

OrbitCatalog collect_coarsest_orbits(const PointConfiguration& config, const PointGroup& group,
                                     const OrbitCatalog& triangulations, std::size_t threads)
{
    const std::size_t m = triangulations.representatives.size();
    struct Found
    {
        Subdivision canonical;
        Subdivision subdivision;
        QVector ray;
    };
    std::vector<std::vector<Found>> found(m);
    parallel_for(m, threads, [&](std::size_t i) {
        for (auto& r : secondary_rays(config, triangulations.representatives[i]))
            found[i].push_back({group.canonical(r.subdivision), std::move(r.subdivision), std::move(r.ray)});
    });

    const RowSpace lineality = affine_lineality(config);
    std::map<Subdivision, const Found*> rays;
    std::map<QVector, Subdivision> by_vector;
    for (const auto& list : found)
        for (const auto& f : list) {
            QVector key = group.canonical(f.ray, &lineality);
            auto [it, inserted] = by_vector.emplace(key, f.canonical);
            if (!inserted && it->second != f.canonical)
                throw InvariantViolation("equivalent rays induce inequivalent subdivisions");
            rays.emplace(f.canonical, &f);
        }
    if (rays.size() != by_vector.size())
        throw InvariantViolation("inequivalent rays induce equivalent subdivisions");

    OrbitCatalog cat;
    for (const auto& [s, f] : rays) {
        cat.representatives.push_back(s);
        // move the ray along with its subdivision to the canonical representative
        for (const auto& g : group.elements())
            if (group.apply(g, f->subdivision) == s) {
                cat.heights.push_back(group.apply(g, f->ray));
                break;
            }
    }
    cat.orbit_sizes.resize(cat.representatives.size());
    parallel_for(cat.representatives.size(), threads,
                 [&](std::size_t i) { cat.orbit_sizes[i] = group.orbit_size(cat.representatives[i]); });
    for (const auto& r : cat.representatives)
        ++cat.spread_histogram[r.spread()];
    return cat;
}

}  // namespace secfan
