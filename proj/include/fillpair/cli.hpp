#pragma once
// Command-line surface. Subcommands:
//   count      - class count for one genus
//   enumerate  - all classes for one genus, as JSON lines or a CSV summary
//   verify     - diagnostic report for one vertical gluing
//   polygon    - the 4n-gon side list of a valid pair
//   menage     - seating counts or class representatives
//   bound      - per-genus bounds, or the full CSV table
//   render     - draw an origami as a labeled row of squares (text or SVG)
// Exit codes: 0 success, 1 a requested check failed or the object does not
// exist, 2 malformed arguments. Primary output is deterministic for a fixed
// config (including the worker count); a one-line summary goes to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fillpair/bounds.hpp"
#include "fillpair/census.hpp"
#include "fillpair/menage.hpp"
#include "fillpair/origami.hpp"
#include "fillpair/perm.hpp"
#include "fillpair/polygon.hpp"

namespace fillpair {

struct RunConfig {
    std::string command;
    int genus = -1;
    int n = -1;
    std::string permText;
    std::string format;  // jsonl | csv | text (per-command default)
    int workers = 1;
    bool allowLong = false;
    bool crossCheck = false;
    bool listClasses = false;
    bool excludeOpposite = false;
    bool table = false;
    int maxGenus = -1;
    std::string outputPath;
};

inline const char* cliUsage() {
    return
        "usage: fillpair <command> [options]\n"
        "  count     --genus G [--workers N] [--allow-long] [--cross-check]\n"
        "  enumerate --genus G [--format jsonl|csv] [--workers N]\n"
        "            [--allow-long] [--cross-check] [--output PATH]\n"
        "  verify    --perm \"(1 2 5 3 4)\" [--n N]   (or a positional perm)\n"
        "  polygon   --perm \"(...)\" [--n N]\n"
        "  menage    --n K [--classes] [--exclude-opposite] [--cross-check]\n"
        "  bound     --genus G | --table --max G\n"
        "  render    --perm \"(...)\" [--format text|svg] [--n N]\n";
}

namespace clidetail {

inline bool parseInt(const std::string& s, int& out) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) return false;
        out = v;
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace clidetail

// Parse argv (without the program name). Returns the config, or a message in
// `err` when the command line is malformed.
inline std::optional<RunConfig> parseArgs(const std::vector<std::string>& args,
                                          std::string& err) {
    if (args.empty()) {
        err = "missing command";
        return std::nullopt;
    }
    RunConfig cfg;
    cfg.command = args[0];
    const bool known = cfg.command == "count" || cfg.command == "enumerate" ||
                       cfg.command == "verify" || cfg.command == "polygon" ||
                       cfg.command == "menage" || cfg.command == "bound" ||
                       cfg.command == "render";
    if (!known) {
        err = "unknown command: " + cfg.command;
        return std::nullopt;
    }
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto next = [&](int& slot) {
            if (i + 1 >= args.size() || !clidetail::parseInt(args[i + 1], slot)) {
                err = "flag " + a + " needs an integer value";
                return false;
            }
            ++i;
            return true;
        };
        if (a == "--genus" || a == "-g") {
            if (!next(cfg.genus)) return std::nullopt;
        } else if (a == "--n") {
            if (!next(cfg.n)) return std::nullopt;
        } else if (a == "--workers") {
            if (!next(cfg.workers)) return std::nullopt;
        } else if (a == "--max") {
            if (!next(cfg.maxGenus)) return std::nullopt;
        } else if (a == "--perm") {
            if (i + 1 >= args.size()) {
                err = "flag --perm needs a value";
                return std::nullopt;
            }
            cfg.permText = args[++i];
        } else if (a == "--format") {
            if (i + 1 >= args.size()) {
                err = "flag --format needs a value";
                return std::nullopt;
            }
            cfg.format = args[++i];
        } else if (a == "--output") {
            if (i + 1 >= args.size()) {
                err = "flag --output needs a value";
                return std::nullopt;
            }
            cfg.outputPath = args[++i];
        } else if (a == "--allow-long") {
            cfg.allowLong = true;
        } else if (a == "--cross-check") {
            cfg.crossCheck = true;
        } else if (a == "--classes") {
            cfg.listClasses = true;
        } else if (a == "--exclude-opposite") {
            cfg.excludeOpposite = true;
        } else if (a == "--table") {
            cfg.table = true;
        } else if (!a.empty() && a[0] != '-' && cfg.permText.empty() &&
                   (cfg.command == "verify" || cfg.command == "polygon" ||
                    cfg.command == "render")) {
            cfg.permText = a;  // positional permutation
        } else {
            err = "unexpected argument: " + a;
            return std::nullopt;
        }
    }
    if (cfg.workers < 1) {
        err = "--workers must be positive";
        return std::nullopt;
    }
    return cfg;
}

namespace clidetail {

// Parse the 1-based cycle text into a vertical gluing, honoring --n.
inline std::optional<Perm> permFromConfig(const RunConfig& cfg, std::string& err) {
    if (cfg.permText.empty()) {
        err = "missing --perm";
        return std::nullopt;
    }
    auto c = parseCycle(cfg.permText);
    if (!c) {
        err = "cannot parse permutation: " + cfg.permText;
        return std::nullopt;
    }
    Perm p = permFromCycleSeq(*c);
    if (cfg.n > 0 && cfg.n != static_cast<int>(p.size())) {
        err = "--n disagrees with the permutation size";
        return std::nullopt;
    }
    return p;
}

inline CensusResult censusFor(const RunConfig& cfg) {
    if (cfg.genus == 2) return genus2Census();
    CensusOptions opt;
    opt.workers = cfg.workers;
    opt.allowLong = cfg.allowLong;
    return enumerateBrute(cfg.genus, opt);
}

// Returns false on a cross-check mismatch (genus 2 has nothing to cross).
inline bool crossCheckAgainstConstruction(const CensusResult& brute,
                                          const RunConfig& cfg,
                                          std::ostream& errStream) {
    if (cfg.genus == 2) return true;
    CensusOptions opt;
    opt.workers = cfg.workers;
    opt.allowLong = cfg.allowLong;
    const CensusResult cons = enumerateConstructive(cfg.genus, opt);
    if (cons.count == brute.count && cons.classes == brute.classes) return true;
    errStream << "cross-check failed: construction found " << cons.count
              << " classes, brute force " << brute.count << "\n";
    return false;
}

inline int runCount(const RunConfig& cfg, std::ostream& out,
                    std::ostream& errStream) {
    const CensusResult r = censusFor(cfg);
    if (cfg.crossCheck && !crossCheckAgainstConstruction(r, cfg, errStream)) {
        return 1;
    }
    out << r.count << "\n";
    errStream << "count=" << r.count << " elapsed=" << r.elapsedSeconds << "s\n";
    return 0;
}

inline int runEnumerate(const RunConfig& cfg, std::ostream& out,
                        std::ostream& errStream) {
    const std::string format = cfg.format.empty() ? "jsonl" : cfg.format;
    if (format != "jsonl" && format != "csv") {
        errStream << "enumerate supports --format jsonl or csv\n";
        return 2;
    }
    const CensusResult r = censusFor(cfg);
    if (cfg.crossCheck && !crossCheckAgainstConstruction(r, cfg, errStream)) {
        return 1;
    }
    if (format == "jsonl") {
        for (const auto& pc : r.classes) out << jsonlLine(pc) << "\n";
    } else {
        out << "genus,squares,count,asymptotic_bound\n";
        out << r.genus << ',' << r.n << ',' << r.count << ',';
        if (r.genus >= 3) out << asymptoticBound(r.genus).str();
        out << "\n";
    }
    errStream << "count=" << r.count << " elapsed=" << r.elapsedSeconds << "s\n";
    return 0;
}

inline int runVerify(const RunConfig& cfg, std::ostream& out,
                     std::ostream& errStream) {
    std::string err;
    auto p = permFromConfig(cfg, err);
    if (!p) {
        errStream << err << "\n";
        return 2;
    }
    const VerifyReport r = verifyOne(*p);
    out << "permutation: " << formatCycle(cycleSeqOf(r.p)) << "\n";
    out << "squares: " << r.n << "\n";
    out << "single cycle: " << (r.singleCycle ? "yes" : "no") << "\n";
    out << "vertices: " << r.surface.vertexCount << "\n";
    out << "euler characteristic: " << r.surface.eulerChar << "\n";
    out << "genus: " << r.surface.genus << "\n";
    out << "stratum:";
    for (int s : r.stratum) out << ' ' << s;
    out << "\n";
    out << "valid filling pair: " << (r.validPair ? "yes" : "no") << "\n";
    out << "trace agrees: " << (r.traceAgrees ? "yes" : "no") << "\n";
    if (r.singleCycle) {
        out << "canonical diffs:";
        for (int d : r.canonical.diffs) out << ' ' << d;
        out << "\n";
    }
    if (r.validPair) out << "orbit size: " << r.orbitSize << "\n";
    return 0;
}

inline int runPolygon(const RunConfig& cfg, std::ostream& out,
                      std::ostream& errStream) {
    std::string err;
    auto p = permFromConfig(cfg, err);
    if (!p) {
        errStream << err << "\n";
        return 2;
    }
    const auto lines = polygonDumpLines(Origami{*p});
    if (!lines) {
        errStream << "no polygon: the complement is not a single disk\n";
        return 1;
    }
    for (const auto& line : *lines) out << line << "\n";
    return 0;
}

inline int runMenage(const RunConfig& cfg, std::ostream& out,
                     std::ostream& errStream) {
    if (cfg.n < 3) {
        errStream << "menage needs --n of at least 3\n";
        return 2;
    }
    if (cfg.crossCheck) {
        long long listed = 0;
        enumerateMenage(cfg.n, [&](const Perm&) { ++listed; });
        if (BigInt(listed) != menageNumber(cfg.n)) {
            errStream << "cross-check failed: enumerated " << listed
                      << " seatings, closed form says "
                      << menageNumber(cfg.n).str() << "\n";
            return 1;
        }
        const auto classes = gilbertClasses(cfg.n);
        if (static_cast<long long>(classes.size()) !=
            gilbertClassCountByBurnside(cfg.n)) {
            errStream << "cross-check failed: class count disagrees with the "
                         "rotation average\n";
            return 1;
        }
        errStream << "cross-check ok\n";
    }
    if (cfg.listClasses) {
        for (const auto& c : gilbertClasses(cfg.n)) {
            if (cfg.excludeOpposite && isAllOpposite(c.representative)) continue;
            // 1-based image row of the representative.
            for (int i = 0; i < cfg.n; ++i) {
                if (i) out << ' ';
                out << c.representative[i] + 1;
            }
            out << "\n";
        }
    } else {
        out << menageNumber(cfg.n).str() << "\n";
    }
    return 0;
}

inline int runBound(const RunConfig& cfg, std::ostream& out,
                    std::ostream& errStream) {
    if (cfg.table) {
        const int gMax = cfg.maxGenus > 0 ? cfg.maxGenus : 7;
        if (gMax < 3) {
            errStream << "--max must be at least 3\n";
            return 2;
        }
        // Census counts are filled in live where the scan is quick.
        std::map<int, long long> counts;
        for (int g = 3; g <= std::min(gMax, 6); ++g) {
            counts[g] = enumerateBrute(g).count;
        }
        for (const auto& line : boundTable(gMax, counts)) out << line << "\n";
        return 0;
    }
    if (cfg.genus < 3) {
        errStream << "bound needs --genus of at least 3 (or --table)\n";
        return 2;
    }
    out << "genus: " << cfg.genus << "\n";
    out << "asymptotic bound: " << asymptoticBound(cfg.genus).str() << "\n";
    try {
        const BoundReport r = exactBound(cfg.genus);
        out << "seating classes: " << r.seatingClasses.str() << "\n";
        out << "exact bound: " << r.exactBound.str() << "\n";
        out << "exact bound excluding opposite: " << r.exactBoundExcl.str()
            << "\n";
    } catch (const std::invalid_argument&) {
        out << "exact bound: not computable at this size\n";
    }
    return 0;
}

inline int runRender(const RunConfig& cfg, std::ostream& out,
                     std::ostream& errStream) {
    std::string err;
    auto p = permFromConfig(cfg, err);
    if (!p) {
        errStream << err << "\n";
        return 2;
    }
    const int n = static_cast<int>(p->size());
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "text") {
        // Top-gluing targets above the row of squares: the top edge of
        // square i meets the bottom edge of square p(i).
        std::ostringstream top, border, cells;
        for (int i = 0; i < n; ++i) {
            std::string t = std::to_string((*p)[i] + 1);
            while (t.size() < 3) t.insert(t.begin(), ' ');
            top << t << ' ';
            border << "+---";
            std::string c = std::to_string(i + 1);
            while (c.size() < 3) c.insert(c.begin(), ' ');
            cells << '|' << c;
        }
        border << '+';
        cells << '|';
        out << top.str() << "\n"
            << border.str() << "\n"
            << cells.str() << "\n"
            << border.str() << "\n";
        return 0;
    }
    if (format == "svg") {
        const int cell = 40, pad = 20, textRow = 16;
        const int width = 2 * pad + n * cell;
        const int height = 2 * pad + cell + textRow;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
            << height << "\">\n";
        for (int i = 0; i < n; ++i) {
            const int x = pad + i * cell;
            const int y = pad + textRow;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\""
                << cell << "\" height=\"" << cell
                << "\" fill=\"none\" stroke=\"black\"/>\n";
            out << "  <text x=\"" << x + cell / 2 << "\" y=\""
                << y + cell / 2 + 5 << "\" text-anchor=\"middle\">" << i + 1
                << "</text>\n";
            out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << pad + 8
                << "\" text-anchor=\"middle\" font-size=\"12\">" << (*p)[i] + 1
                << "</text>\n";
            out << "  <line x1=\"" << x + cell / 2 << "\" y1=\"" << y
                << "\" x2=\"" << x + cell / 2 << "\" y2=\"" << pad + 12
                << "\" stroke=\"gray\"/>\n";
        }
        out << "</svg>\n";
        return 0;
    }
    errStream << "render supports --format text or svg\n";
    return 2;
}

}  // namespace clidetail

// Run a parsed command, writing primary output to `out`. Exit-code contract
// as in the header comment.
inline int runCli(const RunConfig& cfg, std::ostream& out,
                  std::ostream& errStream) {
    try {
        if (cfg.command == "count") return clidetail::runCount(cfg, out, errStream);
        if (cfg.command == "enumerate") {
            return clidetail::runEnumerate(cfg, out, errStream);
        }
        if (cfg.command == "verify") return clidetail::runVerify(cfg, out, errStream);
        if (cfg.command == "polygon") {
            return clidetail::runPolygon(cfg, out, errStream);
        }
        if (cfg.command == "menage") return clidetail::runMenage(cfg, out, errStream);
        if (cfg.command == "bound") return clidetail::runBound(cfg, out, errStream);
        if (cfg.command == "render") return clidetail::runRender(cfg, out, errStream);
    } catch (const std::invalid_argument& e) {
        errStream << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        errStream << "internal error: " << e.what() << "\n";
        return 1;
    }
    errStream << cliUsage();
    return 2;
}

// Full entry point: parse, route output, report errors.
inline int cliMain(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string err;
    auto cfg = parseArgs(args, err);
    if (!cfg) {
        std::cerr << "error: " << err << "\n" << cliUsage();
        return 2;
    }
    if (!cfg->outputPath.empty()) {
        std::ofstream file(cfg->outputPath);
        if (!file) {
            std::cerr << "error: cannot open output file " << cfg->outputPath
                      << "\n";
            return 2;
        }
        return runCli(*cfg, file, std::cerr);
    }
    return runCli(*cfg, std::cout, std::cerr);
}

}  // namespace fillpair
