// Command-line front end: Cartan/Dynkin classification, root data, p-isogenies,
// regular embeddings and order polynomials of generic finite reductive groups.

#include <CLI11.hpp>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "genred/io.hpp"

using namespace genred;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

std::size_t weyl_cap_default() {
    if (const char* env = std::getenv("GENRED_WEYL_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return kDefaultWeylCap;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

// options shared by every command that needs a root datum
struct DatumSource {
    std::string file;
    std::string type;
    std::size_t rank = 0;
    bool sc = false;
    bool ad = false;
    std::string catalog;
    std::size_t param = 0;

    void attach(CLI::App* cmd, bool positional = true) {
        if (positional) cmd->add_option("file", file, "datum file (JSON)");
        cmd->add_option("--type", type, "Cartan family letter (A..G) or full label like D4");
        cmd->add_option("--rank", rank, "rank when --type is a single letter");
        cmd->add_flag("--sc", sc, "simply connected form");
        cmd->add_flag("--ad", ad, "adjoint form (default)");
        cmd->add_option("--catalog", catalog, "catalog name: GL SL PGL Sp Spin SO HSpin");
        cmd->add_option("--param", param, "catalog parameter");
    }

    CartanMatrix cartan() const {
        if (!type.empty()) {
            char fam = type[0];
            std::size_t rk = rank;
            if (type.size() > 1) rk = std::stoul(type.substr(1));
            return standard_cartan(fam, rk);
        }
        if (!file.empty()) return json_to_datum(load_json(file)).cartan;
        throw ParseError("no Cartan matrix given (use --type or a file)");
    }

    RootDatum datum() const {
        if (!catalog.empty()) return catalog_datum(catalog, param);
        if (!type.empty()) {
            CartanMatrix C = cartan();
            return sc ? sc_datum(C) : adjoint_datum(C);
        }
        if (!file.empty()) return json_to_datum(load_json(file));
        throw ParseError("no datum given (use a file, --type or --catalog)");
    }
};

std::string twist_name(TwistKind t) {
    switch (t) {
        case TwistKind::Untwisted: return "untwisted";
        case TwistKind::Twisted: return "twisted";
        case TwistKind::VeryTwisted: return "very-twisted";
    }
    return "?";
}

Json classification_to_json(const IsogenyClassification& cls) {
    Json j;
    j["central"] = cls.central;
    j["isomorphism"] = cls.isomorphism;
    if (cls.frobenius_m) j["frobenius_m"] = *cls.frobenius_m;
    if (cls.steinberg) {
        j["steinberg_d"] = cls.steinberg->first;
        j["steinberg_m"] = cls.steinberg->second;
    }
    if (cls.q) j["q"] = q_to_string(*cls.q);
    if (cls.twist) j["twist"] = twist_name(*cls.twist);
    if (cls.ordinary) j["ordinary"] = *cls.ordinary;
    return j;
}

void print_classification(const IsogenyClassification& cls) {
    std::cout << "central:      " << (cls.central ? "yes" : "no") << "\n";
    std::cout << "isomorphism:  " << (cls.isomorphism ? "yes" : "no") << "\n";
    if (cls.frobenius_m)
        std::cout << "frobenius:    m = " << *cls.frobenius_m << "\n";
    else
        std::cout << "frobenius:    no\n";
    if (cls.steinberg)
        std::cout << "steinberg:    P^" << cls.steinberg->first << " = p^" << cls.steinberg->second << " I\n";
    else
        std::cout << "steinberg:    no\n";
    if (cls.q) std::cout << "q:            " << q_to_string(*cls.q) << "\n";
    if (cls.twist) std::cout << "twist:        " << twist_name(*cls.twist) << "\n";
    if (cls.ordinary) std::cout << "ordinary:     " << (*cls.ordinary ? "yes" : "no") << "\n";
}

CompleteRootDatum complete_from_options(const std::string& file, const std::string& type, std::size_t rank,
                                        bool sc) {
    if (!file.empty()) return json_to_complete(load_json(file));
    if (!type.empty()) {
        std::string label = type;
        if (label.size() == 1) label += std::to_string(rank);
        return standard_complete(label, sc);
    }
    throw ParseError("no complete datum given (use a file or --type)");
}

IntMat weyl_word_matrix(const RootDatum& D, const std::string& word) {
    IntMat w = IntMat::identity(D.rank);
    for (char c : word) {
        if (c < '1' || c > '9') throw ParseError("Weyl word must use digits 1..9");
        std::size_t s = static_cast<std::size_t>(c - '1');
        if (s >= D.base_size) throw ParseError("generator index out of range in Weyl word");
        w = w * D.weyl_gens[s];
    }
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root data, p-isogenies and order polynomials of finite reductive groups"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    // ---- cartan ----
    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix utilities");
    cartan_cmd->require_subcommand(1);
    auto* cartan_classify = cartan_cmd->add_subcommand("classify", "classify and print the fundamental group");
    DatumSource cc_src;
    cc_src.attach(cartan_classify);

    // ---- datum ----
    auto* datum_cmd = app.add_subcommand("datum", "root datum operations");
    datum_cmd->require_subcommand(1);

    auto* datum_build = datum_cmd->add_subcommand("build", "validate a datum and echo its normalized file");
    DatumSource db_src;
    db_src.attach(datum_build);
    std::string db_out;
    datum_build->add_option("-o,--out", db_out, "output file");

    auto* datum_dual = datum_cmd->add_subcommand("dual", "dual root datum");
    DatumSource dd_src;
    dd_src.attach(datum_dual);
    std::string dd_out;
    datum_dual->add_option("-o,--out", dd_out, "output file");

    auto* datum_product = datum_cmd->add_subcommand("product", "direct product of two data");
    std::vector<std::string> dp_files;
    datum_product->add_option("files", dp_files, "two datum files")->expected(2);
    std::string dp_out;
    datum_product->add_option("-o,--out", dp_out, "output file");

    auto* datum_iso = datum_cmd->add_subcommand("iso", "isomorphism verdict with witness");
    std::vector<std::string> di_files;
    datum_iso->add_option("files", di_files, "two datum files")->expected(2);

    auto* datum_center = datum_cmd->add_subcommand("center", "X/ZR invariants and center connectivity");
    DatumSource dc_src;
    dc_src.attach(datum_center);
    long dc_p = 1;
    datum_center->add_option("--p", dc_p, "prime (or 1)");

    auto* datum_classes = datum_cmd->add_subcommand("classes", "isogeny classes of a semisimple Cartan type");
    DatumSource dcl_src;
    dcl_src.attach(datum_classes);

    // ---- isogeny ----
    auto* iso_cmd = app.add_subcommand("isogeny", "p-isogeny validation and classification");
    iso_cmd->require_subcommand(1);
    auto* iso_check = iso_cmd->add_subcommand("check", "validate an isogeny file");
    std::string ic_file;
    iso_check->add_option("file", ic_file, "isogeny file (JSON)")->required();

    auto* iso_catalog = iso_cmd->add_subcommand("catalog", "exceptional isogeny pairs");
    std::string icat_type;
    unsigned long icat_m = 0;
    iso_catalog->add_option("--type", icat_type, "C2, G2, F4 or BnCn")->required();
    iso_catalog->add_option("--m", icat_m, "twist exponent m (or n for BnCn)");
    std::string icat_out;
    iso_catalog->add_option("-o,--out", icat_out, "output file");

    // ---- embed ----
    auto* embed_cmd = app.add_subcommand("embed", "regular embeddings");
    embed_cmd->require_subcommand(1);
    auto* embed_check = embed_cmd->add_subcommand("check", "check a morphism file for regular embedding");
    std::string ec_file;
    embed_check->add_option("file", ec_file, "morphism file { source, target, P, p }")->required();

    auto* embed_build = embed_cmd->add_subcommand("build", "construct a regular embedding");
    DatumSource eb_src;
    eb_src.attach(embed_build);
    long eb_p = 0;
    embed_build->add_option("--p", eb_p, "prime")->required();
    std::string eb_out;
    embed_build->add_option("-o,--out", eb_out, "output file");

    // ---- order ----
    auto* order_cmd = app.add_subcommand("order", "order polynomial of a complete root datum");
    std::string o_file, o_type, o_q;
    std::size_t o_rank = 0;
    bool o_sc = false, o_ad = false, o_factored = false, o_molien = false, o_bn = false, o_both = false;
    bool o_table_check = false;
    std::size_t o_cap = weyl_cap_default();
    order_cmd->add_option("file", o_file, "complete datum file (JSON)");
    order_cmd->add_option("--type", o_type, "type label, e.g. A1, 2A3, 3D4, 2B2");
    order_cmd->add_option("--rank", o_rank, "rank when --type is a single letter");
    order_cmd->add_flag("--sc", o_sc, "simply connected base datum");
    order_cmd->add_flag("--ad", o_ad, "adjoint base datum (default)");
    order_cmd->add_option("--q", o_q, "evaluate at q, format p^a or p^a/2 or a plain integer");
    order_cmd->add_flag("--factored", o_factored, "print the cyclotomic factorization");
    order_cmd->add_flag("--molien", o_molien, "Molien-sum route only");
    order_cmd->add_flag("--bn", o_bn, "BN-decomposition route only");
    order_cmd->add_flag("--both", o_both, "run both routes and cross-check (default)");
    order_cmd->add_option("--cap", o_cap, "Weyl enumeration cap");
    order_cmd->add_flag("--table-check", o_table_check, "compare against the built-in simple-type table");

    // ---- ennola / dualc / toric ----
    auto* ennola_cmd = app.add_subcommand("ennola", "Ennola dual of a complete datum");
    std::string en_file, en_out;
    ennola_cmd->add_option("file", en_file, "complete datum file")->required();
    ennola_cmd->add_option("-o,--out", en_out, "output file");

    auto* dualc_cmd = app.add_subcommand("dualc", "dual complete datum");
    std::string duc_file, duc_out;
    dualc_cmd->add_option("file", duc_file, "complete datum file")->required();
    dualc_cmd->add_option("-o,--out", duc_out, "output file");

    auto* toric_cmd = app.add_subcommand("toric", "maximal toric sub-datum order");
    std::string t_file, t_word;
    toric_cmd->add_option("file", t_file, "complete datum file")->required();
    toric_cmd->add_option("--w", t_word, "Weyl word in generators, e.g. 121")->required();

    // allow the global --json after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cartan_classify) {
            CartanMatrix C = cc_src.cartan();
            auto labels = classify(C);
            auto fg = fundamental_group(C);
            if (json_out) {
                Json j;
                j["types"] = Json::array();
                for (const auto& l : labels) j["types"].push_back(l.str());
                j["fundamental_group"] = Json::array();
                for (const auto& d : fg) j["fundamental_group"].push_back(int_to_json(d));
                j["weyl_order"] = int_to_json(weyl_order(C));
                emit(j, "");
            } else {
                std::cout << "type:";
                for (const auto& l : labels) std::cout << " " << l.str();
                std::cout << "\nfundamental group: [";
                for (std::size_t i = 0; i < fg.size(); ++i) std::cout << (i ? ", " : "") << fg[i].get_str();
                std::cout << "]\n|W| = " << weyl_order(C).get_str() << "\n";
            }
        } else if (*datum_build) {
            RootDatum D = db_src.datum();
            Json j = datum_to_json(D);
            j["roots"] = Json::array();
            for (const auto& rt : D.roots) {
                Json row = Json::array();
                for (const auto& c : rt) row.push_back(int_to_json(c));
                j["roots"].push_back(row);
            }
            emit(j, db_out);
        } else if (*datum_dual) {
            emit(datum_to_json(dual_datum(dd_src.datum())), dd_out);
        } else if (*datum_product) {
            RootDatum a = json_to_datum(load_json(dp_files[0]));
            RootDatum b = json_to_datum(load_json(dp_files[1]));
            emit(datum_to_json(direct_product(a, b)), dp_out);
        } else if (*datum_iso) {
            RootDatum a = json_to_datum(load_json(di_files[0]));
            RootDatum b = json_to_datum(load_json(di_files[1]));
            auto res = isomorphic(a, b);
            Json j;
            if (is_isomorphic(res)) {
                const auto& wit = std::get<IsomorphismWitness>(res);
                j["isomorphic"] = true;
                j["P"] = mat_to_json(wit.P);
                j["Pcirc"] = mat_to_json(wit.Pcirc);
            } else if (std::holds_alternative<Indeterminate>(res)) {
                j["isomorphic"] = "indeterminate";
            } else {
                j["isomorphic"] = false;
            }
            if (json_out)
                emit(j, "");
            else if (is_isomorphic(res))
                std::cout << "isomorphic, witness P = " << j["P"].dump() << ", Pcirc = " << j["Pcirc"].dump()
                          << "\n";
            else if (std::holds_alternative<Indeterminate>(res))
                std::cout << "indeterminate (bounded non-semisimple search was inconclusive)\n";
            else
                std::cout << "not isomorphic\n";
        } else if (*datum_center) {
            RootDatum D = dc_src.datum();
            auto inv = x_mod_zr_invariants(D);
            Json j;
            j["free_rank"] = inv.free_rank;
            j["torsion"] = Json::array();
            for (const auto& t : inv.torsion) j["torsion"].push_back(int_to_json(t));
            j["center_connected"] = center_is_connected(D, Int(dc_p));
            if (json_out)
                emit(j, "");
            else {
                std::cout << "X/ZR: free rank " << inv.free_rank << ", torsion [";
                for (std::size_t i = 0; i < inv.torsion.size(); ++i)
                    std::cout << (i ? ", " : "") << inv.torsion[i].get_str();
                std::cout << "]\ncenter connected at p=" << dc_p << ": "
                          << (center_is_connected(D, Int(dc_p)) ? "yes" : "no") << "\n";
            }
        } else if (*datum_classes) {
            CartanMatrix C = dcl_src.cartan();
            auto classes = enumerate_isogeny_classes(C);
            Json j = Json::array();
            for (const auto& cls : classes) {
                Json e;
                e["index"] = int_to_json(cls.index);
                e["basis"] = mat_to_json(cls.lattice.basis);
                e["quotient"] = Json::array();
                for (const auto& q : cls.quotient) e["quotient"].push_back(int_to_json(q));
                j.push_back(e);
            }
            if (json_out)
                emit(j, "");
            else {
                std::cout << classes.size() << " isogeny classes\n";
                for (const auto& cls : classes) {
                    std::cout << "  index " << cls.index.get_str() << ", L/ZC = [";
                    for (std::size_t i = 0; i < cls.quotient.size(); ++i)
                        std::cout << (i ? ", " : "") << cls.quotient[i].get_str();
                    std::cout << "]\n";
                }
            }
        } else if (*iso_check) {
            PIsogeny f = json_to_isogeny(load_json(ic_file));
            auto cls = classify_isogeny(f);
            if (json_out) {
                Json j = classification_to_json(cls);
                j["valid"] = true;
                Json dag = Json::array();
                for (auto d : f.dagger) dag.push_back(d);
                j["dagger"] = dag;
                Json qs = Json::array();
                for (const auto& q : f.q_base) qs.push_back(int_to_json(q));
                j["q_base"] = qs;
                emit(j, "");
            } else {
                std::cout << "valid p-isogeny (p = " << f.p.get_str() << ")\n";
                std::cout << "q_s:          ";
                for (const auto& q : f.q_base) std::cout << q.get_str() << " ";
                std::cout << "\n";
                print_classification(cls);
            }
        } else if (*iso_catalog) {
            ExceptionalType t;
            if (icat_type == "C2" || icat_type == "B2")
                t = ExceptionalType::C2;
            else if (icat_type == "G2")
                t = ExceptionalType::G2;
            else if (icat_type == "F4")
                t = ExceptionalType::F4;
            else if (icat_type == "BnCn")
                t = ExceptionalType::BnCn;
            else
                throw BadType(icat_type);
            emit(isogeny_to_json(exceptional_catalog(t, icat_m)), icat_out);
        } else if (*embed_check) {
            Json j = load_json(ec_file);
            RootDatum src = json_to_datum(j.at("source"));
            RootDatum tgt = json_to_datum(j.at("target"));
            IntMat P = json_to_mat(j.at("P"));
            Int p = json_to_int(j.at("p"));
            auto rep = regular_embedding_check(src, tgt, P, p);
            if (json_out) {
                Json out;
                out["regular_embedding"] = rep.is_regular_embedding;
                out["hom_of_root_data"] = rep.hom_of_root_data;
                out["surjective"] = rep.surjective;
                out["p_prime_torsion_free"] = rep.p_prime_torsion_free;
                emit(out, "");
            } else {
                std::cout << "hom of root data:     " << (rep.hom_of_root_data ? "yes" : "no") << "\n"
                          << "surjective:           " << (rep.surjective ? "yes" : "no") << "\n"
                          << "p'-torsion free:      " << (rep.p_prime_torsion_free ? "yes" : "no") << "\n"
                          << "regular embedding:    " << (rep.is_regular_embedding ? "yes" : "no") << "\n";
            }
            if (!rep.is_regular_embedding) return kExitValidation;
        } else if (*embed_build) {
            RootDatum D = eb_src.datum();
            RegularEmbedding emb = regular_embedding_build(D, Int(eb_p));
            Json j;
            j["ambient"] = datum_to_json(emb.ambient);
            j["inclusion"] = mat_to_json(emb.inclusion);
            emit(j, eb_out);
        } else if (*order_cmd) {
            if (o_table_check) {
                CompleteRootDatum crd = complete_from_options(o_file, o_type, o_rank, o_sc && !o_ad);
                auto rep = table_check(crd, o_cap);
                if (json_out) {
                    Json j;
                    j["match"] = rep.match;
                    j["row"] = rep.row_label;
                    j["computed"] = qpoly_to_json(rep.computed);
                    j["table"] = qpoly_to_json(rep.table);
                    emit(j, "");
                } else {
                    std::cout << "row " << rep.row_label << ": " << (rep.match ? "match" : "MISMATCH") << "\n";
                    std::cout << "computed: " << rep.computed.str() << "\n";
                    if (!rep.match) std::cout << "table:    " << rep.table.str() << "\n";
                }
                if (!rep.match) return kExitValidation;
            } else {
                CompleteRootDatum crd = complete_from_options(o_file, o_type, o_rank, o_sc && !o_ad);
                bool run_both = o_both || (!o_molien && !o_bn);
                std::optional<OrderPolynomial> bn, molien;
                if (run_both || o_bn) bn = order_polynomial_bn(crd, o_cap);
                if (run_both || o_molien) molien = order_polynomial_molien(crd, o_cap);
                if (bn && molien && bn->poly != molien->poly)
                    throw ConsistencyFailure("bn and Molien routes disagree");
                const OrderPolynomial& op = bn ? *bn : *molien;
                Json j;
                j["order_polynomial"] = qpoly_to_json(op.poly);
                j["factored"] = op.factored.str();
                j["table_sourced"] = op.table_sourced;
                if (bn && molien) j["cross_check"] = "ok";
                if (!o_q.empty()) {
                    QuadNum q = parse_q(o_q);
                    if (!p_set_contains(crd, q)) throw QNotInP(q.str());
                    QuadNum value = op.poly.eval(q);
                    j["value"] = int_to_json(value.as_integer());
                }
                if (json_out) {
                    emit(j, "");
                } else {
                    std::cout << "|G| = " << op.poly.str() << "\n";
                    if (o_factored) std::cout << "factored: " << op.factored.str() << "\n";
                    if (op.table_sourced) std::cout << "(table-sourced: |W| above the cap)\n";
                    if (bn && molien) std::cout << "cross-check bn vs molien: ok\n";
                    if (j.contains("value"))
                        std::cout << "|G|(" << o_q << ") = " << j["value"].dump() << "\n";
                }
            }
        } else if (*ennola_cmd) {
            CompleteRootDatum crd = json_to_complete(load_json(en_file));
            emit(complete_to_json(ennola(crd)), en_out);
        } else if (*dualc_cmd) {
            CompleteRootDatum crd = json_to_complete(load_json(duc_file));
            emit(complete_to_json(dual_complete(crd)), duc_out);
        } else if (*toric_cmd) {
            CompleteRootDatum crd = json_to_complete(load_json(t_file));
            IntMat w = weyl_word_matrix(crd.datum, t_word);
            QPoly f = toric_order(crd, w);
            const WeylGroup& W = crd.weyl(weyl_cap_default());
            auto idx = W.index_of(w);
            Json j;
            j["toric_order"] = qpoly_to_json(f);
            if (idx) {
                std::string word;
                for (int s : W.words[*idx]) word += std::to_string(s + 1);
                j["reduced_word"] = word;
                j["length"] = W.lengths[*idx];
            }
            if (json_out)
                emit(j, "");
            else {
                std::cout << "|G_w| = " << f.str() << "\n";
                if (idx) std::cout << "reduced word: " << j["reduced_word"].get<std::string>() << "\n";
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
