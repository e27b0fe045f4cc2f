package cch;

public class Cache {
    public Object fetch(String k) {
        return null;
    }

    public Object load(String k) {
        Object fresh = null;
        return fresh;
    }

    public Object get(String k) {
        Object v = fetch(k);
        return v;
    }

    public Object peek(String k) {
        Object v = fetch(k);
        return v;
    }
}
