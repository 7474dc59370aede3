#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpglab/enumerate.hpp"
#include "bpglab/graph_io.hpp"
#include "bpglab/isi.hpp"
#include "bpglab/json_io.hpp"
#include "bpglab/letters.hpp"
#include "bpglab/metrics.hpp"
#include "bpglab/named.hpp"
#include "bpglab/parameters.hpp"
#include "bpglab/recognition.hpp"
#include "bpglab/transform.hpp"
#include "bpglab/universal.hpp"

namespace {

using namespace bpglab;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

void emit_graph(const Graph& g, const std::string& out_file) {
    if (out_file.empty())
        write_graph(std::cout, g);
    else
        write_graph_file(out_file, g);
}

void emit_text(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw FormatError("cannot open '" + out_file + "' for writing");
        out << text;
    }
}

std::string read_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw FormatError("cannot open '" + filename + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int max_n_override() {
    const char* env = std::getenv("BPGLAB_MAX_N");
    if (!env) return 0;
    return std::atoi(env);
}

Graph gen_graph(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "': wrong number of parameters");
    };
    if (family == "hnn") {
        need(1);
        return universal_bpg(params[0]).graph;
    }
    if (family == "zn") {
        need(1);
        return universal_chain(params[0]);
    }
    if (family == "fstar") {
        need(1);
        return universal_star_forest(params[0]);
    }
    if (family == "fstar-bounded") {
        need(2);
        return universal_star_forest_bounded(params[0], params[1]);
    }
    if (family == "qt") {
        need(1);
        return rigid_witness(params[0]).graph;
    }
    if (family == "rnt") {
        need(2);
        return rigid_witness_inflated(params[0], params[1]).graph;
    }
    if (family == "rnt-multi") {
        if (params.size() < 2)
            throw std::invalid_argument("rnt-multi: need n and at least one mark");
        return rigid_witness_multi(params[0], {params.begin() + 1, params.end()}).graph;
    }
    return make_named({family, params});
}

void print_certificate(const MembershipCertificate& cert) {
    if (cert.forbidden) {
        std::cout << "forbidden induced subgraph " << cert.forbidden_name << " at vertices";
        for (int v = 1; v <= cert.forbidden->source.vertex_count(); ++v)
            std::cout << " " << cert.forbidden->map[v];
        std::cout << "\n";
    } else if (!cert.note.empty()) {
        std::cout << cert.note << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"bpglab: bipartite permutation graph toolkit"};
    app.require_subcommand(1);
    int exit_code = kExitYes;

    // gen
    std::string gen_family, gen_out;
    std::vector<int> gen_params;
    auto* gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params);
    gen->add_option("-o,--output", gen_out);
    gen->callback([&] { emit_graph(gen_graph(gen_family, gen_params), gen_out); });

    // recognize
    std::string rec_class, rec_file;
    bool rec_cert = false;
    auto* rec = app.add_subcommand("recognize", "test class membership");
    rec->add_option("class", rec_class)->required();
    rec->add_option("file", rec_file)->required();
    rec->add_flag("--certificate", rec_cert);
    rec->callback([&] {
        ClassId c = ClassId::parse(rec_class);
        Graph g = read_graph_file(rec_file);
        MembershipCertificate cert;
        bool member = is_member(c, g, cert);
        std::cout << (member ? "yes" : "no") << "\n";
        if (rec_cert) print_certificate(cert);
        exit_code = member ? kExitYes : kExitNo;
    });

    // encode
    auto* enc = app.add_subcommand("encode", "encode a graph as a word");
    std::string enc_file, enc_out;
    auto* enc_letters = enc->add_subcommand("letters", "path-decoder letter system");
    enc_letters->add_option("file", enc_file)->required();
    enc_letters->add_option("-o,--output", enc_out);
    enc_letters->callback([&] {
        Graph g = read_graph_file(enc_file);
        auto sys = encode_bpg(g);
        if (!sys) {
            std::cout << "not a bipartite permutation graph\n";
            exit_code = kExitNo;
            return;
        }
        emit_text(letter_system_to_json(*sys), enc_out);
    });
    std::string encc_file;
    auto* enc_chain = enc->add_subcommand("chain", "two-letter words of a connected chain graph");
    enc_chain->add_option("file", encc_file)->required();
    enc_chain->callback([&] {
        Graph g = read_graph_file(encc_file);
        auto pair = encode_chain(g);
        std::cout << pair.w1.letters << "\n" << pair.w2.letters << "\n";
    });

    // decode
    auto* dec = app.add_subcommand("decode", "decode a word into a graph");
    std::string dec_file, dec_out;
    auto* dec_letters = dec->add_subcommand("letters", "letter system JSON to graph");
    dec_letters->add_option("file", dec_file)->required();
    dec_letters->add_option("-o,--output", dec_out);
    dec_letters->callback([&] {
        LetterSystem sys = letter_system_from_json(read_file(dec_file));
        emit_graph(letter_graph(sys), dec_out);
    });

    // isi
    std::string isi_solver = "auto", isi_g, isi_h;
    bool isi_cert = false, isi_unpadded = false;
    auto* isi = app.add_subcommand("isi", "induced subgraph containment");
    isi->add_option("--solver", isi_solver)
        ->check(CLI::IsMember({"auto", "bruteforce", "linear-forest-ilp", "p5free-matching"}));
    isi->add_flag("--certificate", isi_cert);
    isi->add_flag("--unpadded", isi_unpadded,
                  "use the literal matching rule (host components cannot hold "
                  "extra isolated vertices unless matched)");
    isi->add_option("host", isi_g)->required();
    isi->add_option("pattern", isi_h)->required();
    isi->callback([&] {
        Graph g = read_graph_file(isi_g);
        Graph h = read_graph_file(isi_h);
        bool yes = false;
        if (isi_solver == "bruteforce") {
            auto emb = isi_bruteforce(g, h);
            yes = emb.has_value();
            std::cout << (yes ? "yes" : "no") << "\n";
            if (yes && isi_cert) {
                std::cout << "embedding:";
                for (int v = 1; v <= h.vertex_count(); ++v) std::cout << " " << emb->map[v];
                std::cout << "\n";
            }
        } else if (isi_solver == "linear-forest-ilp") {
            std::vector<CoverTerm> sol;
            yes = isi_linear_forest(g, h, isi_cert ? &sol : nullptr);
            std::cout << (yes ? "yes" : "no") << "\n";
            if (yes && isi_cert)
                for (const auto& term : sol) {
                    std::cout << "x: block " << term.block << " column (";
                    for (std::size_t i = 0; i < term.column.size(); ++i)
                        std::cout << (i ? "," : "") << term.column[i];
                    std::cout << ") count " << term.count << "\n";
                }
        } else if (isi_solver == "p5free-matching") {
            std::optional<Embedding> emb;
            yes = isi_p5free(g, h, isi_unpadded ? MatchingRule::literal : MatchingRule::padded,
                             isi_cert ? &emb : nullptr);
            std::cout << (yes ? "yes" : "no") << "\n";
            if (yes && isi_cert && emb) {
                std::cout << "embedding:";
                for (int v = 1; v <= h.vertex_count(); ++v) std::cout << " " << emb->map[v];
                std::cout << "\n";
            }
        } else {
            yes = isi_auto(g, h);
            std::cout << (yes ? "yes" : "no") << "\n";
        }
        exit_code = yes ? kExitYes : kExitNo;
    });

    // params
    auto* par = app.add_subcommand("params", "parameter calculators and folded constructions");
    std::string par_file;
    auto* par_nd = par->add_subcommand("nd", "neighbourhood diversity");
    par_nd->add_option("file", par_file)->required();
    par_nd->callback(
        [&] { std::cout << neighbourhood_diversity(read_graph_file(par_file)) << "\n"; });
    std::string dist_file;
    auto* par_dist = par->add_subcommand("dist", "distinguishing number");
    par_dist->add_option("file", dist_file)->required();
    par_dist->callback(
        [&] { std::cout << distinguishing_number(read_graph_file(dist_file)) << "\n"; });
    std::string let_file;
    int let_kmax = 3;
    auto* par_let = par->add_subcommand("lettericity", "exact lettericity, any decoder");
    par_let->add_option("file", let_file)->required();
    par_let->add_option("--kmax", let_kmax);
    par_let->callback([&] {
        auto l = lettericity_exact(read_graph_file(let_file), let_kmax);
        if (l)
            std::cout << *l << "\n";
        else
            std::cout << "none (kmax=" << let_kmax << ")\n";
    });
    std::string pa_file;
    int pa_rmax = 6;
    auto* par_pa = par->add_subcommand("path-alphabet", "minimal path-decoder alphabet");
    par_pa->add_option("file", pa_file)->required();
    par_pa->add_option("--rmax", pa_rmax);
    par_pa->callback([&] {
        auto r = path_decoder_alphabet_exact(read_graph_file(pa_file), pa_rmax);
        if (r)
            std::cout << *r << "\n";
        else
            std::cout << "none (rmax=" << pa_rmax << ")\n";
    });
    std::string ufk_f, ufk_k, ufk_out;
    int ufk_copies = 1;
    auto* par_ufk = par->add_subcommand("build-ufk", "folded copies of a base graph");
    par_ufk->add_option("fgraph", ufk_f)->required();
    par_ufk->add_option("kgraph", ufk_k)->required();
    par_ufk->add_option("copies", ufk_copies)->required();
    par_ufk->add_option("-o,--output", ufk_out);
    par_ufk->callback([&] {
        Graph f = read_graph_file(ufk_f);
        KGraph k = kgraph_from_json(read_file(ufk_k));
        emit_graph(build_UFK(f, k, ufk_copies), ufk_out);
    });
    std::string uwk_src, uwk_k, uwk_out;
    int uwk_n = 1;
    auto* par_uwk = par->add_subcommand("build-uwk", "folded word graph prefix");
    par_uwk->add_option("source", uwk_src)->required();
    par_uwk->add_option("kgraph", uwk_k)->required();
    par_uwk->add_option("n", uwk_n)->required();
    par_uwk->add_option("-o,--output", uwk_out);
    par_uwk->callback([&] {
        WordSource src = word_source_from_json(read_file(uwk_src));
        KGraph k = kgraph_from_json(read_file(uwk_k));
        emit_graph(build_UwK(src, k, uwk_n), uwk_out);
    });

    // pivot / lc
    std::string piv_file, piv_out;
    int piv_u = 0, piv_v = 0;
    auto* piv = app.add_subcommand("pivot", "pivot on an edge");
    piv->add_option("file", piv_file)->required();
    piv->add_option("u", piv_u)->required();
    piv->add_option("v", piv_v)->required();
    piv->add_option("-o,--output", piv_out);
    piv->callback([&] { emit_graph(pivot(read_graph_file(piv_file), piv_u, piv_v), piv_out); });

    std::string lc_file, lc_out;
    int lc_v = 0;
    auto* lc = app.add_subcommand("lc", "local complementation at a vertex");
    lc->add_option("file", lc_file)->required();
    lc->add_option("v", lc_v)->required();
    lc->add_option("-o,--output", lc_out);
    lc->callback([&] { emit_graph(local_complement(read_graph_file(lc_file), lc_v), lc_out); });

    // verify-universal
    std::string vu_class, vu_file;
    int vu_n = 1, vu_jobs = 1;
    auto* vu = app.add_subcommand("verify-universal",
                                  "check that a graph hosts every n-vertex class member");
    vu->add_option("--class", vu_class)->required();
    vu->add_option("--n", vu_n)->required();
    vu->add_option("--jobs", vu_jobs);
    vu->add_option("file", vu_file)->required();
    vu->callback([&] {
        ClassId c = ClassId::parse(vu_class);
        Graph u = read_graph_file(vu_file);
        auto rep = verify_universal(c, vu_n, u, vu_jobs);
        if (rep.pass) {
            std::cout << "pass (" << rep.checked << " graphs embedded)\n";
            exit_code = kExitYes;
        } else {
            std::cout << "fail; first counterexample:\n" << to_text(*rep.first_failure);
            exit_code = kExitNo;
        }
    });

    // enumerate
    auto* en = app.add_subcommand("enumerate", "catalogues up to isomorphism");
    std::string en_kind, en_class;
    int en_n = 0, en_jobs = 1;
    bool en_list = false;
    en->add_option("kind", en_kind)->required()->check(CLI::IsMember({"graphs", "bpg", "class"}));
    en->add_option("class-or-n", en_class);
    en->add_option("n", en_n);
    en->add_flag("--list", en_list);
    en->add_option("--jobs", en_jobs);
    en->callback([&] {
        std::vector<Graph> out;
        if (en_kind == "class") {
            if (en_n <= 0) throw std::invalid_argument("enumerate class CLASS N");
            out = enumerate_class(ClassId::parse(en_class), en_n,
                                  max_n_override() >= kEnumerateHardCap);
        } else {
            if (!en_class.empty() && en_n == 0) en_n = std::stoi(en_class);
            if (en_kind == "graphs")
                out = enumerate_graphs(en_n, max_n_override() >= kEnumerateHardCap);
            else
                out = enumerate_bpg(en_n, en_jobs);
        }
        std::cout << "count " << out.size() << "\n";
        if (en_list)
            for (std::size_t i = 0; i < out.size(); ++i) {
                std::cout << "# graph " << (i + 1) << "\n" << to_text(out[i]);
                if (i + 1 < out.size()) std::cout << "\n";
            }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
