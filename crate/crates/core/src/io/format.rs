use serde::{Deserialize, Serialize};

use crate::base::{FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{Cat, InternalCategory, InternalFunctor, InternalNatTrans};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub dom: SetDoc,
    pub cod: SetDoc,
    pub table: Vec<usize>,
}

/// `m`'s table follows the composable pairs `(u, v)`, `d1(u) = d0(v)`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    #[serde(rename = "C0")]
    pub c0: SetDoc,
    #[serde(rename = "C1")]
    pub c1: SetDoc,
    pub d0: MapDoc,
    pub d1: MapDoc,
    pub i: MapDoc,
    pub m: MapDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub dom: CategoryDoc,
    pub cod: CategoryDoc,
    pub f0: MapDoc,
    pub f1: MapDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    pub src: FunctorDoc,
    pub tgt: FunctorDoc,
    pub alpha: MapDoc,
}

fn set_doc(x: &FinObj) -> SetDoc {
    SetDoc { size: x.size(), labels: x.labels().map(<[String]>::to_vec) }
}

fn map_doc(f: &FinMap) -> MapDoc {
    MapDoc { dom: set_doc(f.dom()), cod: set_doc(f.cod()), table: f.table().to_vec() }
}

pub fn category_doc(c: &InternalCategory) -> CategoryDoc {
    CategoryDoc {
        c0: set_doc(c.c0()),
        c1: set_doc(c.c1()),
        d0: map_doc(c.d0()),
        d1: map_doc(c.d1()),
        i: map_doc(c.i()),
        m: map_doc(c.m()),
    }
}

pub fn functor_doc(f: &InternalFunctor) -> FunctorDoc {
    FunctorDoc { dom: category_doc(f.dom()), cod: category_doc(f.cod()), f0: map_doc(f.f0()), f1: map_doc(f.f1()) }
}

pub fn nat_trans_doc(a: &InternalNatTrans) -> NatTransDoc {
    NatTransDoc { src: functor_doc(a.src()), tgt: functor_doc(a.tgt()), alpha: map_doc(a.alpha()) }
}

/// Pretty JSON; key order is fixed by the document types, so output is deterministic.
pub fn to_structured<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn serialize_category(c: &InternalCategory) -> String {
    to_structured(&category_doc(c))
}

pub fn serialize_functor(f: &InternalFunctor) -> String {
    to_structured(&functor_doc(f))
}

pub fn serialize_nat_trans(a: &InternalNatTrans) -> String {
    to_structured(&nat_trans_doc(a))
}

/// Converts documents to values, naming the field of the first problem.
struct Reader<'a> {
    text: &'a str,
}

impl Reader<'_> {
    /// Line of the nested key path, found by searching for each key in turn.
    fn line_of(&self, path: &str) -> usize {
        let mut pos = 0;
        for key in path.split('.') {
            if let Some(off) = self.text[pos..].find(&format!("\"{key}\"")) {
                pos += off;
            }
        }
        self.text[..pos].matches('\n').count() + 1
    }

    fn fail(&self, path: &str, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line_of(path), field: path.to_string(), message: message.into() }
    }

    fn set(&self, d: &SetDoc, path: &str) -> Result<FinObj> {
        match &d.labels {
            None => Ok(FinObj::new(d.size)),
            Some(l) if l.len() == d.size => Ok(FinObj::labelled(l.clone())),
            Some(l) => Err(self.fail(&format!("{path}.labels"), format!("{} labels for size {}", l.len(), d.size))),
        }
    }

    fn map(&self, d: &MapDoc, path: &str) -> Result<FinMap> {
        let (dom, cod) = (self.set(&d.dom, &format!("{path}.dom"))?, self.set(&d.cod, &format!("{path}.cod"))?);
        FinMap::new(dom, cod, d.table.clone()).map_err(|e| self.fail(&format!("{path}.table"), e.to_string()))
    }

    fn category(&self, d: &CategoryDoc, path: &str) -> Result<InternalCategory> {
        let at = |field: &str| if path.is_empty() { field.to_string() } else { format!("{path}.{field}") };
        let c0 = self.set(&d.c0, &at("C0"))?;
        let c1 = self.set(&d.c1, &at("C1"))?;
        let maps = [("d0", &d.d0), ("d1", &d.d1), ("i", &d.i)];
        let mut parsed = Vec::new();
        for (name, doc) in maps {
            let f = self.map(doc, &at(name))?;
            let (want_dom, want_cod) = if name == "i" { (&c0, &c1) } else { (&c1, &c0) };
            if f.dom() != want_dom || f.cod() != want_cod {
                return Err(self.fail(&at(name), "domain or codomain does not match C0/C1"));
            }
            parsed.push(f);
        }
        let m = self.map(&d.m, &at("m"))?;
        let i = parsed.pop().expect("three maps");
        let d1 = parsed.pop().expect("three maps");
        let d0 = parsed.pop().expect("three maps");
        let c = InternalCategory::new(c0, c1, d0, d1, i, m).map_err(|e| self.fail(&at("m"), e.to_string()))?;
        c.validate().into_result()?;
        Ok(c)
    }

    fn functor(&self, d: &FunctorDoc, path: &str) -> Result<InternalFunctor> {
        let at = |field: &str| if path.is_empty() { field.to_string() } else { format!("{path}.{field}") };
        let dom = self.category(&d.dom, &at("dom"))?.into_cat();
        let cod = self.category(&d.cod, &at("cod"))?.into_cat();
        let f0 = self.map(&d.f0, &at("f0"))?;
        let f1 = self.map(&d.f1, &at("f1"))?;
        let f = InternalFunctor::new(dom, cod, f0, f1).map_err(|e| self.fail(&at("f0"), e.to_string()))?;
        f.validate().into_result()?;
        Ok(f)
    }
}

fn decode<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        let field = message.split('`').nth(1).unwrap_or("document").to_string();
        Error::Parse { line: e.line(), field, message }
    })
}

pub fn parse_category(text: &str) -> Result<InternalCategory> {
    Reader { text }.category(&decode(text)?, "")
}

pub fn parse_functor(text: &str) -> Result<InternalFunctor> {
    Reader { text }.functor(&decode(text)?, "")
}

pub fn parse_nat_trans(text: &str) -> Result<InternalNatTrans> {
    let doc: NatTransDoc = decode(text)?;
    let r = Reader { text };
    let src = r.functor(&doc.src, "src")?;
    let tgt = r.functor(&doc.tgt, "tgt")?;
    let alpha = r.map(&doc.alpha, "alpha")?;
    let a = InternalNatTrans::new(src, tgt, alpha).map_err(|e| r.fail("alpha", e.to_string()))?;
    a.validate().into_result()?;
    Ok(a)
}

/// [`parse_category`], returned shared.
pub fn parse_cat(text: &str) -> Result<Cat> {
    parse_category(text).map(InternalCategory::into_cat)
}
