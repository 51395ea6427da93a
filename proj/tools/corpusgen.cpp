// Small-order graph corpus generator: emits one graph6 line per isomorphism
// class. Intended to feed the squareham verification campaigns.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hamsq/enumeration.hpp"

int main(int argc, char** argv) {
    CLI::App app{"corpusgen - enumerate small graphs as graph6 lines"};
    int n = 6;
    int min_n = 0;
    std::string klass = "two-blocks";
    std::string out_path;
    app.add_option("--n", n, "largest order to enumerate")->required();
    app.add_option("--min-n", min_n, "smallest order to include (default: same as --n)");
    app.add_option("--class", klass, "all | connected | two-blocks | blockchains | nontrivial-blockchains")
        ->check(CLI::IsMember({"all", "connected", "two-blocks", "blockchains", "nontrivial-blockchains"}));
    app.add_option("--out", out_path, "output file (default: stdout)");
    CLI11_PARSE(app, argc, argv);
    if (min_n == 0) min_n = n;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        out = &file;
    }

    try {
        for (int order = min_n; order <= n; ++order) {
            std::vector<hamsq::Graph> graphs;
            if (klass == "all")
                graphs = hamsq::enumerate_graphs(order);
            else if (klass == "connected")
                graphs = hamsq::enumerate_connected_graphs(order);
            else if (klass == "two-blocks")
                graphs = hamsq::enumerate_two_blocks(order);
            else if (klass == "blockchains")
                graphs = hamsq::enumerate_blockchains(order, false);
            else
                graphs = hamsq::enumerate_blockchains(order, true);
            for (const hamsq::Graph& g : graphs) *out << hamsq::emit_graph6(g) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "corpusgen: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
