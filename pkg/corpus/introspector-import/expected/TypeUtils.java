package fj.data;

public class TypeUtils {
    public static String name(String methodName, boolean compatibleWithJavaBean) {
        String propertyName = methodName;
        if (compatibleWithJavaBean) {
            propertyName = decapitalize(methodName.substring(3));
        }
        return propertyName;
    }

    private static String decapitalize(String name) {
        return name;
    }
}
