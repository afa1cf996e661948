#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "secdt/clear.hpp"
#include "secdt/dataset.hpp"
#include "secdt/dtrain.hpp"
#include "secdt/mpc3/engine.hpp"
#include "secdt/mpc3/transport.hpp"

namespace {

using namespace secdt;
using json = nlohmann::ordered_json;

SecretDataset share_dataset(Abb& abb, const TrainingSet& data) {
    SecretDataset sd;
    for (const auto& col : data.attrs) sd.attrs.push_back(abb.enc_signed(col));
    sd.labels = abb.enc(data.labels);
    return sd;
}

struct TrainRun {
    DecisionTree tree;
    CostMeter costs;
    double seconds = 0;
    std::vector<u64> bytes_sent; // per party; empty in clear mode
};

TrainRun run_clear(const TrainingSet& data, int height, u64 seed,
                   const RingConfig& ring) {
    TrainRun out;
    ClearAbb abb(ring, seed);
    auto t0 = std::chrono::steady_clock::now();
    out.tree = reveal_tree(abb, train(abb, share_dataset(abb, data), height));
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    out.costs = abb.costs();
    return out;
}

TrainRun run_sim3(const TrainingSet& data, int height, u64 seed,
                  const RingConfig& ring) {
    auto mesh = mpc3::make_local_mesh();
    TrainRun out;
    std::exception_ptr err;
    std::mutex mu;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::thread> threads;
    for (int p = 0; p < 3; ++p)
        threads.emplace_back([&, p] {
            try {
                mpc3::Mpc3Abb abb(ring, p, *mesh[p].next, *mesh[p].prev, seed);
                auto tree = reveal_tree(
                    abb, train(abb, share_dataset(abb, data), height));
                if (p == 0) {
                    out.tree = std::move(tree);
                    out.costs = abb.costs();
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!err) err = std::current_exception();
            }
            mesh[p].next->close();
            mesh[p].prev->close();
        });
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    for (int p = 0; p < 3; ++p)
        out.bytes_sent.push_back(mesh[p].next->bytes_sent +
                                 mesh[p].prev->bytes_sent);
    return out;
}

TrainRun run_net3(const TrainingSet& data, int height, u64 seed,
                  const RingConfig& ring, int party,
                  const std::string& listen, const std::string& next_addr) {
    auto ch = mpc3::connect_ring(party, listen, next_addr);
    TrainRun out;
    auto t0 = std::chrono::steady_clock::now();
    mpc3::Mpc3Abb abb(ring, party, *ch.next, *ch.prev, seed);
    out.tree = reveal_tree(abb, train(abb, share_dataset(abb, data), height));
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    out.costs = abb.costs();
    out.bytes_sent = {ch.next->bytes_sent + ch.prev->bytes_sent};
    ch.next->close();
    ch.prev->close();
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string cost_report(const std::string& mode, const TrainingSet& data,
                        int height, u64 seed, const TrainRun& run) {
    json j;
    j["mode"] = mode;
    j["n"] = data.rows();
    j["m"] = data.cols();
    j["height"] = height;
    j["seed"] = seed;
    j["nonfree_ops"] = run.costs.nonfree_ops;
    j["rounds"] = run.costs.rounds;
    j["wall_seconds"] = run.seconds;
    for (const auto& [key, units] : run.costs.breakdown) j["op." + key] = units;
    for (std::size_t p = 0; p < run.bytes_sent.size(); ++p)
        j["bytes_sent." + std::to_string(p)] = run.bytes_sent[p];
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<u64> parse_list(const std::string& s) {
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoull(item));
    if (out.empty()) throw std::runtime_error("empty list");
    return out;
}

// grid syntax: "n=256,1024;m=4;h=2,5"
struct BenchGrid {
    std::vector<u64> n{256, 1024}, m{4}, h{5};
};

BenchGrid parse_grid(const std::string& s) {
    BenchGrid g;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad grid entry: " + part);
        auto key = part.substr(0, eq);
        auto vals = parse_list(part.substr(eq + 1));
        if (key == "n")
            g.n = vals;
        else if (key == "m")
            g.m = vals;
        else if (key == "h")
            g.h = vals;
        else
            throw std::runtime_error("unknown grid key: " + key);
    }
    return g;
}

TrainingSet synthetic_dataset(std::size_t n, std::size_t m, u64 seed,
                              const RingConfig& ring) {
    std::mt19937_64 rng(seed);
    TrainingSet data;
    data.label_name = "label";
    data.attrs.resize(m);
    const u64 bound = (u64(1) << ring.value_bits) - 1;
    for (std::size_t j = 0; j < m; ++j) {
        data.attr_names.push_back("x" + std::to_string(j));
        data.attrs[j].resize(n);
        for (auto& v : data.attrs[j]) v = i64(rng() % bound);
    }
    data.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        data.labels[i] = (u64(data.attrs[0][i]) + (rng() & 3)) % bound >
                                 bound / 2
                             ? 1
                             : 0;
    return data;
}

int cmd_train(const std::string& mode, const std::string& data_path,
              int height, double scale, u64 seed, const std::string& out_path,
              const std::string& costs_path, int party,
              const std::string& listen, const std::string& peers) {
    RingConfig ring;
    auto data = ingest_csv_file(data_path, scale, ring);

    TrainRun run;
    if (mode == "clear") {
        run = run_clear(data, height, seed, ring);
    } else if (mode == "sim3") {
        run = run_sim3(data, height, seed, ring);
    } else if (mode == "net3") {
        std::vector<std::string> addrs;
        std::stringstream ss(peers);
        std::string item;
        while (std::getline(ss, item, ',')) addrs.push_back(item);
        if (addrs.size() != 2)
            throw std::runtime_error(
                "net3 needs exactly 2 peers (successor,predecessor)");
        if (party < 0 || party > 2)
            throw std::runtime_error("net3 needs --party 0, 1, or 2");
        if (listen.empty()) throw std::runtime_error("net3 needs --listen");
        run = run_net3(data, height, seed, ring, party, listen, addrs[0]);
    } else {
        throw std::runtime_error("unknown mode: " + mode);
    }

    if (!out_path.empty()) write_file(out_path, run.tree.to_json());
    auto report = cost_report(mode, data, height, seed, run);
    if (!costs_path.empty())
        write_file(costs_path, report);
    else
        std::cout << report;
    return 0;
}

int cmd_predict(const std::string& tree_path, const std::string& data_path,
                double scale, const std::string& out_path) {
    auto tree = DecisionTree::from_json(read_file(tree_path));
    auto data = ingest_csv_file(data_path, scale, RingConfig{});
    std::ostringstream csv;
    csv << "label\n";
    std::vector<i64> row(data.cols());
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (std::size_t j = 0; j < data.cols(); ++j) row[j] = data.attrs[j][i];
        csv << predict(tree, row) << "\n";
    }
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    return 0;
}

int cmd_bench(const std::string& grid_spec, const std::string& mode, u64 seed,
              const std::string& out_path) {
    auto grid = parse_grid(grid_spec);
    std::ostringstream table;
    table << "n\tm\th\tnonfree_ops\trounds\tseconds\n";
    for (u64 n : grid.n)
        for (u64 m : grid.m)
            for (u64 h : grid.h) {
                RingConfig ring;
                auto data = synthetic_dataset(n, m, seed, ring);
                auto run = mode == "clear"
                               ? run_clear(data, int(h), seed, ring)
                               : run_sim3(data, int(h), seed, ring);
                table << n << "\t" << m << "\t" << h << "\t"
                      << run.costs.nonfree_ops << "\t" << run.costs.rounds
                      << "\t" << run.seconds << "\n";
                std::cerr << "bench n=" << n << " m=" << m << " h=" << h
                          << " done in " << run.seconds << "s\n";
            }
    if (!out_path.empty())
        write_file(out_path, table.str());
    else
        std::cout << table.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secret-shared decision tree training"};
    app.require_subcommand(1);

    std::string mode = "clear", data_path, out_path, costs_path;
    std::string tree_path, grid_spec = "n=256,1024;m=4;h=5";
    std::string listen, peers;
    int height = 2, party = -1;
    double scale = 1.0;
    u64 seed = 1;

    auto* train = app.add_subcommand("train", "train a tree");
    train->add_option("--mode", mode, "clear | sim3 | net3");
    train->add_option("--data", data_path, "training CSV")->required();
    train->add_option("--height", height, "tree height")
        ->required()
        ->check(CLI::NonNegativeNumber);
    train->add_option("--scale", scale, "quantization factor")
        ->check(CLI::PositiveNumber);
    train->add_option("--seed", seed, "RNG seed");
    train->add_option("--out", out_path, "tree output file");
    train->add_option("--costs", costs_path, "cost report file");
    train->add_option("--party", party, "net3 party id");
    train->add_option("--listen", listen, "net3 listen host:port");
    train->add_option("--peers", peers,
                      "net3 successor,predecessor host:port");

    auto* predict = app.add_subcommand("predict", "label rows with a tree");
    predict->add_option("--tree", tree_path, "tree JSON")->required();
    predict->add_option("--data", data_path, "input CSV")->required();
    predict->add_option("--scale", scale, "quantization factor")
        ->check(CLI::PositiveNumber);
    predict->add_option("--out", out_path, "labels output CSV");

    auto* bench = app.add_subcommand("bench", "cost table over a grid");
    bench->add_option("--grid", grid_spec, "e.g. n=256,1024;m=4;h=2,5");
    bench->add_option("--mode", mode, "clear | sim3");
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_option("--out", out_path, "table output file");

    CLI11_PARSE(app, argc, argv);
    try {
        if (train->parsed())
            return cmd_train(mode, data_path, height, scale, seed, out_path,
                             costs_path, party, listen, peers);
        if (predict->parsed())
            return cmd_predict(tree_path, data_path, scale, out_path);
        if (bench->parsed()) return cmd_bench(grid_spec, mode, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
