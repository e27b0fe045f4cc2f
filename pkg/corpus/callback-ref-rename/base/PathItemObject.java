package sw.models;

public class PathItemObject {
    private String ref;

    public void setRef(String ref) {
        this.ref = ref;
    }
}
