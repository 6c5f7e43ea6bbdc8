#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "seawedge/dirac.hpp"
#include "seawedge/equivalence.hpp"
#include "seawedge/fock.hpp"
#include "seawedge/one_particle.hpp"
#include "seawedge/types.hpp"
#include "seawedge/verify.hpp"
#include "seawedge/wedge.hpp"

namespace seawedge {

// Insertion-ordered objects keep every report byte-reproducible.
using Json = nlohmann::ordered_json;

inline Json wedge_to_json(const WedgeVector& v) {
    Json out = Json::array();
    for (const auto& [label, amp] : v.terms()) {
        Json term;
        term["particles"] = label.particles();
        term["holes"] = label.holes();
        term["re"] = amp.real();
        term["im"] = amp.imag();
        out.push_back(std::move(term));
    }
    return out;
}

inline WedgeVector wedge_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("wedge_from_json: expected an array of terms");
    WedgeVector v;
    for (const auto& term : j) {
        BasisLabel label(term.at("particles").get<std::vector<int>>(),
                         term.at("holes").get<std::vector<int>>());
        v.add_term(label, Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return v;
}

inline Json one_particle_to_json(const OneParticleVector& f) {
    Json out = Json::array();
    for (const auto& [mode, c] : f.coeffs()) {
        Json term;
        term["mode"] = mode;
        term["re"] = c.real();
        term["im"] = c.imag();
        out.push_back(std::move(term));
    }
    return out;
}

inline OneParticleVector one_particle_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("one_particle_from_json: expected an array of terms");
    OneParticleVector f;
    for (const auto& term : j)
        f.add(term.at("mode").get<int>(),
              Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    return f;
}

inline Json fock_to_json(const FockVector& v) {
    Json out = Json::array();
    for (const auto& [state, amp] : v.terms()) {
        Json term;
        term["particles"] = state.particles();
        term["antiparticles"] = state.antiparticles();
        term["re"] = amp.real();
        term["im"] = amp.imag();
        out.push_back(std::move(term));
    }
    return out;
}

inline FockVector fock_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("fock_from_json: expected an array of terms");
    FockVector v;
    for (const auto& term : j) {
        FockState state(term.at("particles").get<std::vector<int>>(),
                        term.at("antiparticles").get<std::vector<int>>());
        v.add_term(state, Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return v;
}

inline Json grid_to_json(const MomentumGrid& grid) {
    Json out;
    out["mass"] = grid.mass;
    Json momenta = Json::array();
    for (const auto& p : grid.momenta) momenta.push_back(Json::array({p[0], p[1], p[2]}));
    out["momenta"] = std::move(momenta);
    return out;
}

inline MomentumGrid grid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mass") || !j.contains("momenta"))
        throw std::invalid_argument("grid_from_json: expected {mass, momenta}");
    std::vector<Vec3> momenta;
    for (const auto& entry : j.at("momenta")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("grid_from_json: each momentum must be [px, py, pz]");
        momenta.push_back(Vec3{entry[0].get<double>(), entry[1].get<double>(), entry[2].get<double>()});
    }
    return MomentumGrid(j.at("mass").get<double>(), std::move(momenta));
}

inline Json spinor_to_json(const Spinor& u) {
    Json out = Json::array();
    for (const auto& c : u) {
        Json comp;
        comp["re"] = c.real();
        comp["im"] = c.imag();
        out.push_back(std::move(comp));
    }
    return out;
}

// Audit table: every mode index with its momentum, energy and spinor.
inline Json mode_basis_to_json(const ModeBasis& basis) {
    Json out;
    out["mass"] = basis.mass();
    out["positive_count"] = basis.positive_count();
    Json modes = Json::array();
    for (int sign : {+1, -1}) {
        for (int k = 1; k <= basis.positive_count(); ++k) {
            const int index = sign * k;
            const auto& mode = basis.mode(index);
            Json row;
            row["index"] = index;
            row["momentum"] = Json::array({mode.momentum[0], mode.momentum[1], mode.momentum[2]});
            row["omega"] = basis.omega(index);
            row["spinor"] = spinor_to_json(mode.spinor);
            modes.push_back(std::move(row));
        }
    }
    out["modes"] = std::move(modes);
    return out;
}

// Mode-multiplicity spectrum per momentum: {+omega, +omega, -omega, -omega}.
inline Json spectrum_to_json(const MomentumGrid& grid) {
    Json out;
    out["mass"] = grid.mass;
    Json rows = Json::array();
    for (const auto& p : grid.momenta) {
        const double w = omega(p, grid.mass);
        Json row;
        row["momentum"] = Json::array({p[0], p[1], p[2]});
        row["omega"] = w;
        row["eigenvalues"] = Json::array({w, w, -w, -w});
        rows.push_back(std::move(row));
    }
    out["spectrum"] = std::move(rows);
    return out;
}

inline Json differential_report_to_json(const DifferentialReport& r) {
    Json out;
    out["trials"] = r.trials;
    out["window"] = r.window;
    out["max_inner_dev"] = r.max_inner_dev;
    out["max_field_dev"] = r.max_field_dev;
    out["pass"] = r.pass;
    out["seed"] = r.seed;
    return out;
}

inline Json car_report_to_json(const CarReport& r) {
    Json out;
    out["trials"] = r.trials;
    out["window"] = r.window;
    out["tolerance"] = r.tolerance;
    out["exact_violations"] = r.exact_violations;
    out["max_deviation"] = r.max_deviation;
    out["pass"] = r.pass;
    out["seed"] = r.seed;
    return out;
}

inline Json rotation_report_to_json(const RotationReport& r) {
    Json out;
    out["rotations"] = r.rotations;
    out["window"] = r.window;
    out["tolerance"] = r.tolerance;
    out["max_deviation"] = r.max_deviation;
    out["pass"] = r.pass;
    out["seed"] = r.seed;
    return out;
}

}  // namespace seawedge
