#include "hopes/io.hpp"

#include <json.hpp>

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace hopes {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> parse_csv(std::istream& in)
{
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    return rows;
}

// Fixed formatting so identical runs produce identical bytes.
std::string format_double(double v)
{
    if (v == kInfinity)
        return "inf";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json label_value(double v)
{
    if (v == kInfinity)
        return json("inf");
    return json(v);
}

double parse_label(const json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "inf")
            return kInfinity;
        throw std::invalid_argument("bad label value");
    }
    return j.get<double>();
}

}  // namespace

PointCloud load_point_cloud_csv(std::istream& in)
{
    return PointCloud::from_points(parse_csv(in));
}

PointCloud load_distance_matrix_csv(std::istream& in)
{
    return PointCloud::from_distances(parse_csv(in));
}

SimplicialComplex load_complex_json(std::istream& in, bool strict)
{
    json j;
    in >> j;
    ComplexBuilder builder(j.at("vertices").get<int>(), strict);
    for (const auto& face : j.at("faces"))
        builder.add_face(face.get<std::vector<Vertex>>());
    return builder.build();
}

void save_complex_json(std::ostream& out, const SimplicialComplex& X)
{
    json faces = json::array();
    for (int k = 0; k <= X.dim(); ++k)
        for (const Face& f : X.faces(k))
            faces.push_back(f);
    json j{{"vertices", X.vertex_count()}, {"faces", faces}};
    out << j.dump(2) << "\n";
}

WeightedComplex load_weighted_complex_json(std::istream& in, double epsilon)
{
    json j;
    in >> j;
    int n = j.at("vertices").get<int>();
    ComplexBuilder builder(n, /*strict=*/true);
    std::map<Face, double> weights;
    for (const auto& entry : j.at("faces")) {
        Face f = make_face(entry.at("v").get<std::vector<Vertex>>());
        builder.add_face(f);
        weights[f] = entry.at("w").get<double>();
    }
    return WeightedComplex(builder.build(), weights, epsilon);
}

void save_weighted_complex_json(std::ostream& out, const WeightedComplex& W)
{
    json faces = json::array();
    const SimplicialComplex& X = W.complex();
    for (int k = 0; k <= X.dim(); ++k) {
        const auto& fs = X.faces(k);
        for (std::size_t i = 0; i < fs.size(); ++i)
            faces.push_back(json{{"v", fs[i]}, {"w", W.weight(k, i)}});
    }
    json j{{"vertices", X.vertex_count()}, {"faces", faces}};
    out << j.dump(2) << "\n";
}

void save_tree_json(std::ostream& out, const SpanningTree& T,
                    unsigned long tie_order_seed)
{
    json faces = json::array();
    const SimplicialComplex& X = T.complex();
    for (int k = 0; k <= X.dim(); ++k)
        for (const Face& f : X.faces(k))
            faces.push_back(json{{"v", f}, {"w", T.weight(f)}});
    json j{{"d", T.d()},
           {"tie_order_seed", tie_order_seed},
           {"faces", faces}};
    out << j.dump(2) << "\n";
}

void save_skeleton_json(std::ostream& out, const LabeledSkeleton& H)
{
    json faces = json::array();
    for (const auto& lf : H.faces()) {
        faces.push_back(json{
            {"v", lf.face},
            {"l", label_value(lf.label.l)},
            {"r", label_value(lf.label.r)},
            {"kind", lf.kind == FaceKind::mst ? "mst" : "critical"}});
    }
    json j{{"d", H.d()}, {"vertices", H.vertex_count()}, {"faces", faces}};
    out << j.dump(2) << "\n";
}

LabeledSkeleton load_skeleton_json(std::istream& in)
{
    json j;
    in >> j;
    std::vector<LabeledFace> faces;
    for (const auto& entry : j.at("faces")) {
        LabeledFace lf;
        lf.face = make_face(entry.at("v").get<std::vector<Vertex>>());
        lf.label.l = parse_label(entry.at("l"));
        lf.label.r = parse_label(entry.at("r"));
        std::string kind = entry.at("kind").get<std::string>();
        if (kind == "mst")
            lf.kind = FaceKind::mst;
        else if (kind == "critical")
            lf.kind = FaceKind::critical;
        else
            throw std::invalid_argument("bad face kind");
        faces.push_back(std::move(lf));
    }
    return LabeledSkeleton(j.at("d").get<int>(), j.at("vertices").get<int>(),
                           std::move(faces));
}

void save_diagram_csv(std::ostream& out, const PersistenceDiagram& D)
{
    out << "dim,birth,death\n";
    for (const auto& dot : D.dots)
        out << D.dim << "," << format_double(dot.birth) << ","
            << format_double(dot.death) << "\n";
}

}  // namespace hopes
