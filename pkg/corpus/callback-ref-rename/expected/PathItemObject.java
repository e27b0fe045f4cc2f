package sw.models;

public class PathItemObject {
    private String ref;

    public void set$ref(String ref) {
        this.ref = ref;
    }
}
