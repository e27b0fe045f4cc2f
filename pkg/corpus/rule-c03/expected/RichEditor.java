package txt;

public class RichEditor extends Editor {
    public void insert(String s, int at) {
    }
}
