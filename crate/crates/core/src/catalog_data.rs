// Embedded catalog diagram files (see data/catalog/).
pub(crate) const CATALOG_FILES: &[(&str, &str)] = &[
    ("4a", include_str!("../data/catalog/dim4a.cox")),
    ("4b", include_str!("../data/catalog/dim4b.cox")),
    ("4c", include_str!("../data/catalog/dim4c.cox")),
    ("4d", include_str!("../data/catalog/dim4d.cox")),
    ("4e", include_str!("../data/catalog/dim4e.cox")),
    ("4f", include_str!("../data/catalog/dim4f.cox")),
    ("4g", include_str!("../data/catalog/dim4g.cox")),
    ("4h", include_str!("../data/catalog/dim4h.cox")),
    ("4i", include_str!("../data/catalog/dim4i.cox")),
    ("4j", include_str!("../data/catalog/dim4j.cox")),
    ("4k", include_str!("../data/catalog/dim4k.cox")),
    ("4l", include_str!("../data/catalog/dim4l.cox")),
    ("4m", include_str!("../data/catalog/dim4m.cox")),
    ("4n", include_str!("../data/catalog/dim4n.cox")),
    ("4o", include_str!("../data/catalog/dim4o.cox")),
    ("4p", include_str!("../data/catalog/dim4p.cox")),
    ("4q", include_str!("../data/catalog/dim4q.cox")),
    ("4r", include_str!("../data/catalog/dim4r.cox")),
    ("4s", include_str!("../data/catalog/dim4s.cox")),
    ("4t", include_str!("../data/catalog/dim4t.cox")),
    ("4u", include_str!("../data/catalog/dim4u.cox")),
    ("4v", include_str!("../data/catalog/dim4v.cox")),
    ("4w", include_str!("../data/catalog/dim4w.cox")),
    ("4x", include_str!("../data/catalog/dim4x.cox")),
    ("5a", include_str!("../data/catalog/dim5a.cox")),
    ("5b", include_str!("../data/catalog/dim5b.cox")),
    ("5c", include_str!("../data/catalog/dim5c.cox")),
    ("5d", include_str!("../data/catalog/dim5d.cox")),
    ("5e", include_str!("../data/catalog/dim5e.cox")),
    ("5f", include_str!("../data/catalog/dim5f.cox")),
    ("5g", include_str!("../data/catalog/dim5g.cox")),
    ("5h", include_str!("../data/catalog/dim5h.cox")),
    ("5i", include_str!("../data/catalog/dim5i.cox")),
    ("5j", include_str!("../data/catalog/dim5j.cox")),
    ("5k", include_str!("../data/catalog/dim5k.cox")),
    ("5l", include_str!("../data/catalog/dim5l.cox")),
    ("5m", include_str!("../data/catalog/dim5m.cox")),
    ("5n", include_str!("../data/catalog/dim5n.cox")),
    ("5o", include_str!("../data/catalog/dim5o.cox")),
    ("5p", include_str!("../data/catalog/dim5p.cox")),
    ("5q", include_str!("../data/catalog/dim5q.cox")),
    ("5r", include_str!("../data/catalog/dim5r.cox")),
    ("5s", include_str!("../data/catalog/dim5s.cox")),
    ("5t", include_str!("../data/catalog/dim5t.cox")),
    ("5u", include_str!("../data/catalog/dim5u.cox")),
    ("5v", include_str!("../data/catalog/dim5v.cox")),
    ("5w", include_str!("../data/catalog/dim5w.cox")),
    ("5x", include_str!("../data/catalog/dim5x.cox")),
    ("5y", include_str!("../data/catalog/dim5y.cox")),
    ("5z", include_str!("../data/catalog/dim5z.cox")),
    ("5aa", include_str!("../data/catalog/dim5aa.cox")),
    ("5ab", include_str!("../data/catalog/dim5ab.cox")),
    ("5ac", include_str!("../data/catalog/dim5ac.cox")),
    ("5ad", include_str!("../data/catalog/dim5ad.cox")),
    ("5ae", include_str!("../data/catalog/dim5ae.cox")),
    ("5af", include_str!("../data/catalog/dim5af.cox")),
    ("5ag", include_str!("../data/catalog/dim5ag.cox")),
    ("5ah", include_str!("../data/catalog/dim5ah.cox")),
    ("5ai", include_str!("../data/catalog/dim5ai.cox")),
    ("5aj", include_str!("../data/catalog/dim5aj.cox")),
    ("5ak", include_str!("../data/catalog/dim5ak.cox")),
    ("5al", include_str!("../data/catalog/dim5al.cox")),
    ("5am", include_str!("../data/catalog/dim5am.cox")),
    ("5an", include_str!("../data/catalog/dim5an.cox")),
    ("5ao", include_str!("../data/catalog/dim5ao.cox")),
    ("5ap", include_str!("../data/catalog/dim5ap.cox")),
    ("5aq", include_str!("../data/catalog/dim5aq.cox")),
    ("5ar", include_str!("../data/catalog/dim5ar.cox")),
    ("5as", include_str!("../data/catalog/dim5as.cox")),
    ("5at", include_str!("../data/catalog/dim5at.cox")),
    ("5au", include_str!("../data/catalog/dim5au.cox")),
    ("5av", include_str!("../data/catalog/dim5av.cox")),
    ("5aw", include_str!("../data/catalog/dim5aw.cox")),
    ("5ax", include_str!("../data/catalog/dim5ax.cox")),
    ("5ay", include_str!("../data/catalog/dim5ay.cox")),
    ("5az", include_str!("../data/catalog/dim5az.cox")),
    ("5ba", include_str!("../data/catalog/dim5ba.cox")),
    ("5bb", include_str!("../data/catalog/dim5bb.cox")),
    ("5bc", include_str!("../data/catalog/dim5bc.cox")),
    ("5bd", include_str!("../data/catalog/dim5bd.cox")),
    ("5be", include_str!("../data/catalog/dim5be.cox")),
    ("5bf", include_str!("../data/catalog/dim5bf.cox")),
    ("5bg", include_str!("../data/catalog/dim5bg.cox")),
    ("5bh", include_str!("../data/catalog/dim5bh.cox")),
    ("5bi", include_str!("../data/catalog/dim5bi.cox")),
    ("6a", include_str!("../data/catalog/dim6a.cox")),
    ("6b", include_str!("../data/catalog/dim6b.cox")),
    ("6c", include_str!("../data/catalog/dim6c.cox")),
    ("6d", include_str!("../data/catalog/dim6d.cox")),
    ("6e", include_str!("../data/catalog/dim6e.cox")),
    ("6f", include_str!("../data/catalog/dim6f.cox")),
    ("6g", include_str!("../data/catalog/dim6g.cox")),
    ("6h", include_str!("../data/catalog/dim6h.cox")),
    ("6i", include_str!("../data/catalog/dim6i.cox")),
    ("6j", include_str!("../data/catalog/dim6j.cox")),
    ("6k", include_str!("../data/catalog/dim6k.cox")),
    ("6l", include_str!("../data/catalog/dim6l.cox")),
    ("6m", include_str!("../data/catalog/dim6m.cox")),
    ("6n", include_str!("../data/catalog/dim6n.cox")),
    ("6o", include_str!("../data/catalog/dim6o.cox")),
    ("6p", include_str!("../data/catalog/dim6p.cox")),
    ("6q", include_str!("../data/catalog/dim6q.cox")),
    ("6r", include_str!("../data/catalog/dim6r.cox")),
    ("6s", include_str!("../data/catalog/dim6s.cox")),
    ("6t", include_str!("../data/catalog/dim6t.cox")),
    ("6u", include_str!("../data/catalog/dim6u.cox")),
    ("6v", include_str!("../data/catalog/dim6v.cox")),
    ("6w", include_str!("../data/catalog/dim6w.cox")),
    ("6x", include_str!("../data/catalog/dim6x.cox")),
    ("6y", include_str!("../data/catalog/dim6y.cox")),
    ("6z", include_str!("../data/catalog/dim6z.cox")),
    ("6aa", include_str!("../data/catalog/dim6aa.cox")),
    ("7a", include_str!("../data/catalog/dim7a.cox")),
    ("7b", include_str!("../data/catalog/dim7b.cox")),
    ("7c", include_str!("../data/catalog/dim7c.cox")),
    ("7d", include_str!("../data/catalog/dim7d.cox")),
    ("7e", include_str!("../data/catalog/dim7e.cox")),
    ("7f", include_str!("../data/catalog/dim7f.cox")),
    ("7g", include_str!("../data/catalog/dim7g.cox")),
    ("7h", include_str!("../data/catalog/dim7h.cox")),
    ("7i", include_str!("../data/catalog/dim7i.cox")),
    ("7j", include_str!("../data/catalog/dim7j.cox")),
    ("7k", include_str!("../data/catalog/dim7k.cox")),
    ("7l", include_str!("../data/catalog/dim7l.cox")),
    ("7m", include_str!("../data/catalog/dim7m.cox")),
    ("7n", include_str!("../data/catalog/dim7n.cox")),
    ("7o", include_str!("../data/catalog/dim7o.cox")),
    ("8a", include_str!("../data/catalog/dim8a.cox")),
    ("8b", include_str!("../data/catalog/dim8b.cox")),
    ("8c", include_str!("../data/catalog/dim8c.cox")),
    ("8d", include_str!("../data/catalog/dim8d.cox")),
    ("8e", include_str!("../data/catalog/dim8e.cox")),
    ("8f", include_str!("../data/catalog/dim8f.cox")),
    ("8g", include_str!("../data/catalog/dim8g.cox")),
    ("9a", include_str!("../data/catalog/dim9a.cox")),
    ("9b", include_str!("../data/catalog/dim9b.cox")),
    ("9c", include_str!("../data/catalog/dim9c.cox")),
    ("9d", include_str!("../data/catalog/dim9d.cox")),
    ("9e", include_str!("../data/catalog/dim9e.cox")),
    ("9f", include_str!("../data/catalog/dim9f.cox")),
    ("9g", include_str!("../data/catalog/dim9g.cox")),
    ("10a", include_str!("../data/catalog/dim10a.cox")),
    ("10b", include_str!("../data/catalog/dim10b.cox")),
    ("10c", include_str!("../data/catalog/dim10c.cox")),
];
